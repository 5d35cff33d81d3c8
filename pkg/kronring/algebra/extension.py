"""
Simple Integral Extensions

The quotient R[X]/(f) as a computational object. Elements are coordinate
vectors relative to 1, xi, ..., xi^(n-1), always reduced, and can be
multiplied four ways:

- naive:          multiply the polynomials, then reduce modulo f (the oracle)
- kronecker:      M_f ([a] (x) [b]) with the precomputed structure matrix
- regular:        a(C)[b] by Horner with companion_matvec, O(n^2)
- representation: A[b] with A the regular representation of a

Every scalar-times-vector product keeps the coordinate of the left factor on
the left, so all strategies agree over noncommutative coefficient rings
whenever the modulus coefficients are central.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence, Union

from kronring.algebra.companion import (
    CompanionMatrix,
    DenseMatrix,
    StructureMatrix,
    Vector,
    companion_matvec,
    companion_of,
    kronecker_left,
    mat_vec,
    matrix_from_columns,
    structure_matrix,
)
from kronring.algebra.poly import (
    DensePolynomial,
    MonicModulus,
    divmod_monic,
    lift_coordinates,
    poly_eval,
    poly_mul,
)
from kronring.core.config import settings
from kronring.core.exceptions import (
    ContextMismatchError,
    DegreeTooLargeError,
    PreconditionViolation,
    ShapeMismatchError,
    UnknownStrategyError,
    UsageError,
)
from kronring.rings import MatrixRing, Ring, RingValue, check_member, check_same_ring

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ExtensionContext:
    """R[X]/(f) with C and M_f built once; compare contexts by identity."""

    ring: Ring
    modulus: MonicModulus
    companion: CompanionMatrix
    structure: StructureMatrix

    @property
    def n(self) -> int:
        return self.modulus.n

    def __repr__(self) -> str:
        return f"ExtensionContext(ring={self.ring.describe()}, n={self.n})"


@dataclass(frozen=True, eq=False)
class ExtElement:
    """Coordinate vector [alpha] of exactly n ring values."""

    context: ExtensionContext
    coords: Vector

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtElement):
            return NotImplemented
        return self.context is other.context and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((id(self.context), self.coords))

    def __add__(self, other: "ExtElement") -> "ExtElement":
        return add(self.context, self, other)

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return sub(self.context, self, other)

    def __neg__(self) -> "ExtElement":
        return neg(self.context, self)

    def __mul__(self, other: "ExtElement") -> "ExtElement":
        return multiply(self.context, self, other)

    def __repr__(self) -> str:
        ring = self.context.ring
        return "[" + ", ".join(ring.format(c) for c in self.coords) + "]"


def make_context(ring: Ring, f: Union[MonicModulus, DensePolynomial]) -> ExtensionContext:
    """
    Create R[X]/(f) with the companion and structure matrices precomputed.

    Raises:
        InvalidModulusError: If f is not monic or has degree 0
        RingMismatchError: If f is not a polynomial over ring
    """
    modulus = f if isinstance(f, MonicModulus) else MonicModulus(f)
    check_same_ring(ring, modulus.ring)
    companion = companion_of(modulus)
    structure = structure_matrix(modulus, companion)
    logger.info(
        f"Created extension context over {ring.describe()} with modulus degree {modulus.n}"
    )
    return ExtensionContext(ring, modulus, companion, structure)


def _check(ctx: ExtensionContext, *elements: ExtElement) -> None:
    for element in elements:
        if element.context is not ctx:
            raise ContextMismatchError("element belongs to a different extension context")


def from_coordinates(ctx: ExtensionContext, coords: Sequence[RingValue]) -> ExtElement:
    if len(coords) != ctx.n:
        raise ShapeMismatchError(f"expected {ctx.n} coordinates, got {len(coords)}")
    check_member(ctx.ring, *coords)
    return ExtElement(ctx, tuple(coords))


def element_from_poly(ctx: ExtensionContext, g: DensePolynomial) -> ExtElement:
    """Coordinates of g(xi): the remainder of g modulo f, padded to length n."""
    check_same_ring(ctx.ring, g.ring)
    _, remainder = divmod_monic(g, ctx.modulus)
    return ExtElement(ctx, remainder.padded(ctx.n))


def lift(a: ExtElement) -> DensePolynomial:
    """The polynomial of degree < n whose coefficients are [a]."""
    return lift_coordinates(a.context.ring, a.coords)


def zero(ctx: ExtensionContext) -> ExtElement:
    return ExtElement(ctx, (ctx.ring.zero(),) * ctx.n)


def one(ctx: ExtensionContext) -> ExtElement:
    return basis_element(ctx, 0)


def basis_element(ctx: ExtensionContext, i: int) -> ExtElement:
    """e_{i+1} = [xi^i] for 0 <= i < n."""
    if not 0 <= i < ctx.n:
        raise UsageError(f"basis index must lie in [0, {ctx.n}), got {i}")
    ring = ctx.ring
    return ExtElement(
        ctx, tuple(ring.one() if j == i else ring.zero() for j in range(ctx.n))
    )


def generator(ctx: ExtensionContext) -> ExtElement:
    """The class of X, i.e. xi itself (equals -a_0 when n = 1)."""
    return element_from_poly(
        ctx, DensePolynomial(ctx.ring, (ctx.ring.zero(), ctx.ring.one()))
    )


def add(ctx: ExtensionContext, a: ExtElement, b: ExtElement) -> ExtElement:
    _check(ctx, a, b)
    plus = ctx.ring.add
    return ExtElement(ctx, tuple(plus(x, y) for x, y in zip(a.coords, b.coords)))


def neg(ctx: ExtensionContext, a: ExtElement) -> ExtElement:
    _check(ctx, a)
    return ExtElement(ctx, tuple(ctx.ring.neg(x) for x in a.coords))


def sub(ctx: ExtensionContext, a: ExtElement, b: ExtElement) -> ExtElement:
    return add(ctx, a, neg(ctx, b))


def _scale(ring: Ring, c: RingValue, v: Sequence[RingValue]) -> Vector:
    return tuple(ring.mul(c, x) for x in v)


def scale(ctx: ExtensionContext, c: RingValue, a: ExtElement) -> ExtElement:
    """Left scalar multiple c*a."""
    _check(ctx, a)
    check_member(ctx.ring, c)
    return ExtElement(ctx, _scale(ctx.ring, c, a.coords))


def mul_naive(ctx: ExtensionContext, a: ExtElement, b: ExtElement) -> ExtElement:
    """Schoolbook product of the lifts, reduced modulo f."""
    _check(ctx, a, b)
    return element_from_poly(ctx, poly_mul(lift(a), lift(b)))


def mul_kronecker(ctx: ExtensionContext, a: ExtElement, b: ExtElement) -> ExtElement:
    """[ab] = (I C ... C^(n-1)) ([a] (x) [b])."""
    _check(ctx, a, b)
    return ExtElement(ctx, coordinate_product(ctx, a.coords, b.coords))


def coordinate_product(
    ctx: ExtensionContext, x: Sequence[RingValue], y: Sequence[RingValue]
) -> Vector:
    """The ring product induced on R^n by the structure matrix."""
    if len(x) != ctx.n or len(y) != ctx.n:
        raise ShapeMismatchError(f"coordinate vectors must have length {ctx.n}")
    return mat_vec(ctx.structure.matrix, kronecker_left(ctx.ring, x, y))


def mul_regular(ctx: ExtensionContext, a: ExtElement, b: ExtElement) -> ExtElement:
    """a(C)[b] by Horner: w <- C w + a_i [b], from a_{n-1} down to a_0."""
    _check(ctx, a, b)
    ring = ctx.ring
    plus = ring.add
    coeffs = a.coords
    w = _scale(ring, coeffs[-1], b.coords)
    for i in range(ctx.n - 2, -1, -1):
        shifted = companion_matvec(ctx.companion, w)
        w = tuple(
            plus(s, ring.mul(coeffs[i], x)) for s, x in zip(shifted, b.coords)
        )
    return ExtElement(ctx, w)


def mul_representation(
    ctx: ExtensionContext, a: ExtElement, b: ExtElement
) -> ExtElement:
    """[ab] = A[b] where A is the regular representation of a."""
    _check(ctx, a, b)
    return ExtElement(ctx, mat_vec(regular_representation(ctx, a), b.coords))


MultiplyFn = Callable[[ExtensionContext, ExtElement, ExtElement], ExtElement]

STRATEGIES: Dict[str, MultiplyFn] = {
    "naive": mul_naive,
    "kronecker": mul_kronecker,
    "regular": mul_regular,
    "representation": mul_representation,
}


def get_strategy(name: str) -> MultiplyFn:
    try:
        return STRATEGIES[name.lower()]
    except KeyError:
        raise UnknownStrategyError(
            f"Unknown strategy: {name}. Supported: {', '.join(STRATEGIES)}"
        ) from None


def multiply(
    ctx: ExtensionContext,
    a: ExtElement,
    b: ExtElement,
    strategy: Optional[str] = None,
) -> ExtElement:
    """Dispatch to a strategy; the default comes from settings (regular)."""
    return get_strategy(strategy or settings.DEFAULT_STRATEGY)(ctx, a, b)


def regular_representation(ctx: ExtensionContext, a: ExtElement) -> DenseMatrix:
    """A = ([a] C[a] ... C^(n-1)[a]), the matrix of multiplication by a."""
    _check(ctx, a)
    column = a.coords
    columns = [column]
    for _ in range(ctx.n - 1):
        column = companion_matvec(ctx.companion, column)
        columns.append(column)
    return matrix_from_columns(ctx.ring, columns)


def power(
    ctx: ExtensionContext, a: ExtElement, k: int, strategy: Optional[str] = None
) -> ExtElement:
    """a^k by square-and-multiply."""
    _check(ctx, a)
    if k < 0:
        raise UsageError(f"exponent must be >= 0, got {k}")
    result = one(ctx)
    base = a
    while k > 0:
        if k & 1:
            result = multiply(ctx, result, base, strategy)
        base = multiply(ctx, base, base, strategy)
        k >>= 1
    return result


def power_coordinates(ctx: ExtensionContext, k: int) -> ExtElement:
    """
    [xi^k]: C^k e_1 by k companion steps, switching to square-and-multiply
    once k reaches POWER_ITERATION_LIMIT * n.
    """
    if k < 0:
        raise UsageError(f"exponent must be >= 0, got {k}")
    if k >= settings.POWER_ITERATION_LIMIT * ctx.n:
        return power(ctx, generator(ctx), k, "regular")
    coords = one(ctx).coords
    for _ in range(k):
        coords = companion_matvec(ctx.companion, coords)
    return ExtElement(ctx, coords)


def evaluate_at(a: ExtElement, xi: RingValue, point_ring: Ring) -> RingValue:
    """Image of a under p(C) -> p(xi) for a point xi with f(xi) = 0."""
    return poly_eval(lift(a), xi, point_ring)


def odot(f: MonicModulus, g: DensePolynomial, h: DensePolynomial) -> DensePolynomial:
    """
    g (.) h: the polynomial of degree < n with coefficients
    (I C ... C^(n-1)) ([g] (x) [h]).

    g and h must already lie in R_n[X]; nothing is reduced here.
    """
    check_same_ring(f.ring, g.ring)
    check_same_ring(f.ring, h.ring)
    n = f.n
    for name, p in (("g", g), ("h", h)):
        if p.degree >= n:
            raise DegreeTooLargeError(f"deg {name} must be < {n}, got {p.degree}")
    structure = structure_matrix(f)
    coords = mat_vec(structure.matrix, kronecker_left(f.ring, g.padded(n), h.padded(n)))
    return DensePolynomial(f.ring, coords)


def _point_ring_for(f: MonicModulus, xi: RingValue) -> Ring:
    if isinstance(f.ring, MatrixRing):
        return f.ring
    if not isinstance(xi, tuple) or not xi:
        raise UsageError("xi must be a square matrix payload")
    return MatrixRing(len(xi), f.ring)


def theorem2_check(
    f: MonicModulus,
    xi: RingValue,
    g: DensePolynomial,
    h: DensePolynomial,
    point_ring: Optional[Ring] = None,
) -> bool:
    """
    Whether g(xi) h(xi) == (g (.) h)(xi) for a matrix xi annihilated by f.

    Raises:
        PreconditionViolation: If f(xi) != 0, reported apart from a failed check
    """
    point_ring = point_ring or _point_ring_for(f, xi)
    if not point_ring.is_zero(poly_eval(f.inner, xi, point_ring)):
        raise PreconditionViolation("f(xi) != 0: xi is not a root of the modulus")

    left = point_ring.mul(poly_eval(g, xi, point_ring), poly_eval(h, xi, point_ring))
    right = poly_eval(odot(f, g, h), xi, point_ring)
    return point_ring.eq(left, right)
