"""
Verification Service

Deterministic property suite behind the `check` command. Every property is
driven by one seeded random.Random stream, so the same seed always yields
the same report.

Each property returns a PropertyResult; the first counterexample found is
rendered into the result and the property stops there.
"""

import logging
import random
from typing import Callable, Iterator, List, Optional, Tuple

from kronring.algebra import (
    STRATEGIES,
    DensePolynomial,
    ExtensionContext,
    MonicModulus,
    circulant_of,
    companion_matvec,
    companion_of,
    divmod_monic,
    element_from_poly,
    format_polynomial,
    kronecker_left,
    make_context,
    mat_mul,
    mat_vec,
    matrix_add,
    odot,
    parse_polynomial,
    poly_add,
    poly_eval,
    poly_mul,
    power_coordinates,
    regular_representation,
    structure_matrix,
    theorem2_check,
)
from kronring.algebra.extension import basis_element, multiply
from kronring.algebra.sampling import random_element, random_monic, random_polynomial
from kronring.core.exceptions import KronringError
from kronring.rings import MatrixRing, Ring, parse_ring
from kronring.schemas import CheckReport, PropertyResult

logger = logging.getLogger(__name__)

SCALAR_RINGS = ("rational", "mod:2", "mod:7", "mod:256")
NONCOMMUTATIVE_RING = "mat:2:mod:5"
NONCOMMUTATIVE_MAX_DEGREE = 6
CIRCULANT_MAX_DEGREE = 8
BASIS_MAX_DEGREE = 10
THEOREM2_MAX_DEGREE = 6

# A case yields None when it holds, or a counterexample description
Case = Callable[[], Optional[str]]


def _evaluate(
    name: str, ring: Ring, degree: Optional[int], cases: Iterator[Case]
) -> PropertyResult:
    result = PropertyResult(name=name, ring=ring.describe(), degree=degree)
    for case in cases:
        result.cases += 1
        try:
            counterexample = case()
        except KronringError as e:
            counterexample = f"{type(e).__name__}: {e}"
        if counterexample is not None:
            result.passed = False
            result.counterexample = counterexample
            logger.error(f"Property {name} failed over {ring.describe()}: {counterexample}")
            break
    return result


def _fmt(ring: Ring, values) -> str:
    return "[" + ", ".join(ring.format(v) for v in values) + "]"


# ---------------------------------------------------------------- ring-core


def ring_properties(ring: Ring, rng: random.Random, samples: int) -> List[PropertyResult]:
    """Ring axioms, commutativity (or a noncommutativity witness), canonical forms."""
    triples = [
        (ring.random(rng), ring.random(rng), ring.random(rng)) for _ in range(samples)
    ]
    add, mul, neg = ring.add, ring.mul, ring.neg
    zero, one = ring.zero(), ring.one()

    def axioms(x, y, z) -> Case:
        def case() -> Optional[str]:
            laws = {
                "additive associativity": add(add(x, y), z) == add(x, add(y, z)),
                "multiplicative associativity": mul(mul(x, y), z) == mul(x, mul(y, z)),
                "left distributivity": mul(x, add(y, z)) == add(mul(x, y), mul(x, z)),
                "right distributivity": mul(add(x, y), z) == add(mul(x, z), mul(y, z)),
                "additive inverse": add(x, neg(x)) == zero,
                "additive identity": add(x, zero) == x,
                "multiplicative identity": mul(x, one) == x and mul(one, x) == x,
            }
            broken = [law for law, holds in laws.items() if not holds]
            if broken:
                return f"{broken[0]} fails for x={ring.format(x)}, y={ring.format(y)}, z={ring.format(z)}"
            return None

        return case

    def canonical(x, y) -> Case:
        def case() -> Optional[str]:
            for value in (add(x, y), mul(x, y), neg(x)):
                if not ring.contains(value) or ring.coerce(value) != value:
                    return f"non-canonical result {value!r}"
            return None

        return case

    results = [
        _evaluate("ring_axioms", ring, None, (axioms(*t) for t in triples)),
        _evaluate("canonical_form", ring, None, (canonical(x, y) for x, y, _ in triples)),
    ]

    if ring.commutative:

        def commutes(x, y) -> Case:
            return lambda: (
                None
                if mul(x, y) == mul(y, x)
                else f"x*y != y*x for x={ring.format(x)}, y={ring.format(y)}"
            )

        results.append(
            _evaluate(
                "commutativity", ring, None, (commutes(x, y) for x, y, _ in triples)
            )
        )
    else:
        witness = any(mul(x, y) != mul(y, x) for x, y, _ in triples)
        results.append(
            PropertyResult(
                name="noncommutativity_witness",
                ring=ring.describe(),
                cases=len(triples),
                passed=witness,
                counterexample=None if witness else "no pair with x*y != y*x",
            )
        )
    return results


# --------------------------------------------------------------------- poly


def division_identity(
    ring: Ring, rng: random.Random, max_degree: int, samples: int
) -> PropertyResult:
    def case() -> Optional[str]:
        f = random_monic(ring, rng.randint(1, max_degree), rng)
        p = random_polynomial(ring, rng.randint(0, 2 * max_degree + 1), rng)
        q, r = divmod_monic(p, f)
        if poly_add(poly_mul(q, f.inner), r) != p or r.degree >= f.n:
            return f"p={format_polynomial(p)}, f={format_polynomial(f.inner)}"
        return None

    return _evaluate("division_identity", ring, None, (case for _ in range(samples)))


def parse_roundtrip(ring: Ring, rng: random.Random, samples: int) -> PropertyResult:
    def case() -> Optional[str]:
        p = random_polynomial(ring, rng.randint(0, 8), rng)
        text = format_polynomial(p)
        if parse_polynomial(text, ring) != p:
            return f"text={text!r}"
        return None

    return _evaluate("parse_format_roundtrip", ring, None, (case for _ in range(samples)))


# ---------------------------------------------------------------- companion


def companion_properties(
    ring: Ring, rng: random.Random, n: int, trials: int
) -> List[PropertyResult]:
    """f(C) = 0, companion_matvec vs mat_vec, block recurrence, Kronecker orientation."""
    moduli = [random_monic(ring, n, rng) for _ in range(trials)]
    results = []

    if not isinstance(ring, MatrixRing):
        point_ring = MatrixRing(n, ring)

        def annihilates(f: MonicModulus) -> Case:
            def case() -> Optional[str]:
                c = companion_of(f)
                if not point_ring.is_zero(poly_eval(f.inner, c.matrix.rows, point_ring)):
                    return f"f={format_polynomial(f.inner)}"
                return None

            return case

        results.append(
            _evaluate("companion_annihilation", ring, n, (annihilates(f) for f in moduli))
        )

    def matvec(f: MonicModulus) -> Case:
        def case() -> Optional[str]:
            c = companion_of(f)
            v = tuple(ring.random(rng) for _ in range(n))
            if companion_matvec(c, v) != mat_vec(c.matrix, v):
                return f"f={format_polynomial(f.inner)}, v={_fmt(ring, v)}"
            return None

        return case

    def recurrence(f: MonicModulus) -> Case:
        def case() -> Optional[str]:
            c = companion_of(f)
            s = structure_matrix(f, c)
            for j in range(2, n + 1):
                if s.block(j) != mat_mul(c.matrix, s.block(j - 1)):
                    return f"f={format_polynomial(f.inner)}, block={j}"
            return None

        return case

    def orientation() -> Optional[str]:
        x = tuple(ring.random(rng) for _ in range(n))
        y = tuple(ring.random(rng) for _ in range(n))
        # conventional u (x) v has entry p*n + q equal to u_p v_q
        standard_y_x = tuple(ring.mul(yp, xq) for yp in y for xq in x)
        if kronecker_left(ring, x, y) != standard_y_x:
            return f"x={_fmt(ring, x)}, y={_fmt(ring, y)}"
        return None

    results.append(_evaluate("companion_matvec", ring, n, (matvec(f) for f in moduli)))
    results.append(
        _evaluate("structure_recurrence", ring, n, (recurrence(f) for f in moduli))
    )
    if ring.commutative:
        results.append(
            _evaluate(
                "kronecker_orientation", ring, n, (orientation for _ in range(trials))
            )
        )
    return results


def circulant_identity(ring: Ring, rng: random.Random, n: int, samples: int) -> PropertyResult:
    """For f = X^n - 1: g(C) = circulant_of(g, n) = regular_representation(g)."""
    f = MonicModulus(
        DensePolynomial(ring, (ring.neg(ring.one()),) + (ring.zero(),) * (n - 1) + (ring.one(),))
    )
    ctx = make_context(ring, f)
    point_ring = MatrixRing(n, ring)

    def case() -> Optional[str]:
        g = random_polynomial(ring, n, rng)
        circulant = circulant_of(g, n)
        evaluated = poly_eval(g, ctx.companion.matrix.rows, point_ring)
        represented = regular_representation(ctx, element_from_poly(ctx, g))
        if not (evaluated == circulant.rows == represented.rows):
            return f"g={format_polynomial(g)}"
        return None

    return _evaluate("circulant_identity", ring, n, (case for _ in range(samples)))


# ---------------------------------------------------------------- extension


def _context(ring: Ring, n: int, rng: random.Random) -> ExtensionContext:
    return make_context(ring, random_monic(ring, n, rng))


def strategy_equivalence(
    ring: Ring, rng: random.Random, n: int, trials: int, pairs: int
) -> PropertyResult:
    """Every registered strategy equals the naive oracle."""

    def cases() -> Iterator[Case]:
        for _ in range(trials):
            ctx = _context(ring, n, rng)
            for _ in range(pairs):
                a, b = random_element(ctx, rng), random_element(ctx, rng)
                yield _agree(ctx, a, b)

    def _agree(ctx, a, b) -> Case:
        def case() -> Optional[str]:
            oracle = multiply(ctx, a, b, "naive")
            for name in STRATEGIES:
                got = multiply(ctx, a, b, name)
                if got != oracle:
                    return (
                        f"f={format_polynomial(ctx.modulus.inner)}; a={a!r}; b={b!r}; "
                        f"naive={oracle!r}; {name}={got!r}"
                    )
            return None

        return case

    return _evaluate("strategy_equivalence", ring, n, cases())


def quotient_axioms(ring: Ring, rng: random.Random, n: int, samples: int) -> PropertyResult:
    ctx = _context(ring, n, rng)

    def case() -> Optional[str]:
        a, b, c = (random_element(ctx, rng) for _ in range(3))
        laws = {
            "associativity": (a * b) * c == a * (b * c),
            "distributivity": a * (b + c) == a * b + a * c and (a + b) * c == a * c + b * c,
            "commutativity": not ring.commutative or a * b == b * a,
        }
        broken = [law for law, holds in laws.items() if not holds]
        if broken:
            return f"{broken[0]}: f={format_polynomial(ctx.modulus.inner)}; a={a!r}; b={b!r}; c={c!r}"
        return None

    return _evaluate("quotient_ring_axioms", ring, n, (case for _ in range(samples)))


def representation_homomorphism(
    ring: Ring, rng: random.Random, n: int, samples: int
) -> PropertyResult:
    """First column is [a]; rep(ab) = rep(a) rep(b); rep(a+b) = rep(a) + rep(b)."""
    ctx = _context(ring, n, rng)

    def case() -> Optional[str]:
        a, b = random_element(ctx, rng), random_element(ctx, rng)
        rep_a = regular_representation(ctx, a)
        rep_b = regular_representation(ctx, b)
        if rep_a.column(0) != a.coords:
            return f"first column of rep(a) != [a] for a={a!r}"
        if regular_representation(ctx, a * b) != mat_mul(rep_a, rep_b):
            return f"rep(ab) != rep(a)rep(b) for a={a!r}, b={b!r}"
        if regular_representation(ctx, a + b) != matrix_add(rep_a, rep_b):
            return f"rep(a+b) != rep(a)+rep(b) for a={a!r}, b={b!r}"
        return None

    return _evaluate("representation_homomorphism", ring, n, (case for _ in range(samples)))


def basis_products(ring: Ring, rng: random.Random, n: int) -> PropertyResult:
    ctx = _context(ring, n, rng)

    def pair(i: int, j: int) -> Case:
        def case() -> Optional[str]:
            if basis_element(ctx, i) * basis_element(ctx, j) != power_coordinates(ctx, i + j):
                return f"f={format_polynomial(ctx.modulus.inner)}; i={i}; j={j}"
            return None

        return case

    return _evaluate(
        "basis_products", ring, n, (pair(i, j) for i in range(n) for j in range(n))
    )


def odot_consistency(ring: Ring, rng: random.Random, n: int, samples: int) -> PropertyResult:
    ctx = _context(ring, n, rng)

    def case() -> Optional[str]:
        g = random_polynomial(ring, n, rng)
        h = random_polynomial(ring, n, rng)
        product = element_from_poly(ctx, g) * element_from_poly(ctx, h)
        if product.coords != odot(ctx.modulus, g, h).padded(n):
            return f"f={format_polynomial(ctx.modulus.inner)}; g={format_polynomial(g)}; h={format_polynomial(h)}"
        return None

    return _evaluate("odot_consistency", ring, n, (case for _ in range(samples)))


def theorem2_instances(ring: Ring, rng: random.Random, n: int, samples: int) -> PropertyResult:
    """g(xi) h(xi) = (g odot h)(xi) with xi the companion matrix of a random f."""

    def case() -> Optional[str]:
        f = random_monic(ring, n, rng)
        xi = companion_of(f).matrix.rows
        g = random_polynomial(ring, n, rng)
        h = random_polynomial(ring, n, rng)
        if not theorem2_check(f, xi, g, h):
            return f"f={format_polynomial(f.inner)}; g={format_polynomial(g)}; h={format_polynomial(h)}"
        return None

    return _evaluate("theorem2", ring, n, (case for _ in range(samples)))


# ------------------------------------------------------------------ goldens


def golden_properties(rng: random.Random, samples: int) -> List[PropertyResult]:
    """Complex numbers, X^3 - 1 circulant products and the two structure tables."""
    rational = parse_ring("rational")
    results = []

    complex_ctx = make_context(rational, parse_polynomial("x^2+1", rational))

    def complex_case() -> Optional[str]:
        a, b = random_element(complex_ctx, rng), random_element(complex_ctx, rng)
        (b0, b1), (c0, c1) = a.coords, b.coords
        expected = (b0 * c0 - b1 * c1, b1 * c0 + b0 * c1)
        for name in STRATEGIES:
            if multiply(complex_ctx, a, b, name).coords != expected:
                return f"{name}: a={a!r}; b={b!r}"
        return None

    results.append(
        _evaluate("golden_complex", rational, 2, (complex_case for _ in range(samples)))
    )

    for selection in ("rational", "mod:7"):
        ring = parse_ring(selection)
        ctx = make_context(ring, parse_polynomial("x^3-1", ring))

        def circulant_case(ctx=ctx, ring=ring) -> Optional[str]:
            a, b = random_element(ctx, rng), random_element(ctx, rng)
            (b0, b1, b2), (c0, c1, c2) = a.coords, b.coords

            def dot3(*terms: Tuple) -> object:
                return ring.sum([ring.mul(x, y) for x, y in terms])

            expected = (
                dot3((b0, c0), (b2, c1), (b1, c2)),
                dot3((b1, c0), (b0, c1), (b2, c2)),
                dot3((b2, c0), (b1, c1), (b0, c2)),
            )
            for name in STRATEGIES:
                if multiply(ctx, a, b, name).coords != expected:
                    return f"{name}: a={a!r}; b={b!r}"
            return None

        results.append(
            _evaluate("golden_circulant", ring, 3, (circulant_case for _ in range(samples)))
        )

    def table_case(text: str, expected: List[List[int]]) -> Case:
        def case() -> Optional[str]:
            f = MonicModulus(parse_polynomial(text, rational))
            rows = structure_matrix(f).matrix.rows
            wanted = tuple(tuple(rational.coerce(e) for e in row) for row in expected)
            return None if rows == wanted else f"structure_matrix({text}) = {rows}"

        return case

    tables = [
        table_case("x^2+1", [[1, 0, 0, -1], [0, 1, 1, 0]]),
        table_case(
            "x^3-1",
            [
                [1, 0, 0, 0, 0, 1, 0, 1, 0],
                [0, 1, 0, 1, 0, 0, 0, 0, 1],
                [0, 0, 1, 0, 1, 0, 1, 0, 0],
            ],
        ),
    ]
    results.append(_evaluate("golden_structure", rational, None, iter(tables)))
    return results


# -------------------------------------------------------------------- suite


def run_check(
    seed: int,
    max_degree: int = 12,
    trials: int = 10,
    pairs: int = 5,
) -> CheckReport:
    """
    Run the whole property suite deterministically from seed.

    Args:
        seed: Seed of the single random stream driving every property
        max_degree: Largest modulus degree exercised
        trials: Random moduli per degree (also scales the sample counts)
        pairs: Random element pairs per modulus

    Returns:
        CheckReport listing every property result in a fixed order
    """
    rng = random.Random(seed)
    report = CheckReport(seed=seed)
    samples = 10 * trials
    cases = trials * pairs
    logger.info(
        f"Running check suite: seed={seed}, max_degree={max_degree}, "
        f"trials={trials}, pairs={pairs}"
    )

    report.results.extend(golden_properties(rng, samples))

    for selection in SCALAR_RINGS + (NONCOMMUTATIVE_RING,):
        ring = parse_ring(selection)
        noncommutative = not ring.commutative
        top = min(max_degree, NONCOMMUTATIVE_MAX_DEGREE) if noncommutative else max_degree

        report.results.extend(ring_properties(ring, rng, 10 * samples))
        report.results.append(division_identity(ring, rng, top, samples))
        report.results.append(parse_roundtrip(ring, rng, samples))

        for n in range(1, top + 1):
            report.results.extend(companion_properties(ring, rng, n, trials))
            report.results.append(strategy_equivalence(ring, rng, n, trials, pairs))
            report.results.append(quotient_axioms(ring, rng, n, cases))
            report.results.append(representation_homomorphism(ring, rng, n, cases))
            report.results.append(odot_consistency(ring, rng, n, cases))
            if n <= BASIS_MAX_DEGREE:
                report.results.append(basis_products(ring, rng, n))
            if not noncommutative:
                if n <= CIRCULANT_MAX_DEGREE:
                    report.results.append(circulant_identity(ring, rng, n, samples))
                if 2 <= n <= THEOREM2_MAX_DEGREE:
                    report.results.append(theorem2_instances(ring, rng, n, trials))

    failures = len(report.failures)
    logger.info(f"Check suite finished: {len(report.results)} properties, {failures} failed")
    return report
