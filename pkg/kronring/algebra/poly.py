"""
Dense Polynomials

Univariate polynomials over a coefficient ring, stored in ascending order:
index i holds the coefficient of X^i, so a coordinate vector relative to
1, xi, ..., xi^(n-1) reads directly as a polynomial. The zero polynomial is
the empty tuple.
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

from kronring.core.exceptions import InvalidModulusError, UsageError
from kronring.rings import MatrixRing, Ring, RingValue, check_member, check_same_ring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DensePolynomial:
    """Normalized polynomial: the last coefficient is never zero."""

    ring: Ring
    coefficients: Tuple[RingValue, ...] = ()

    def __post_init__(self):
        coefficients = list(self.coefficients)
        while coefficients and self.ring.is_zero(coefficients[-1]):
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def of(cls, ring: Ring, values: Sequence) -> "DensePolynomial":
        """Build from raw payloads (ints, Fractions, nested lists), coercing each."""
        return cls(ring, tuple(ring.coerce(v) for v in values))

    @property
    def degree(self) -> int:
        """Degree, with -1 standing for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> RingValue:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return self.ring.zero()

    def padded(self, n: int) -> Tuple[RingValue, ...]:
        """Coefficients padded with zeros to length n (n must be > degree)."""
        return self.coefficients + (self.ring.zero(),) * (n - len(self.coefficients))

    def __add__(self, other: "DensePolynomial") -> "DensePolynomial":
        return poly_add(self, other)

    def __sub__(self, other: "DensePolynomial") -> "DensePolynomial":
        return poly_sub(self, other)

    def __neg__(self) -> "DensePolynomial":
        return poly_neg(self)

    def __mul__(self, other: "DensePolynomial") -> "DensePolynomial":
        return poly_mul(self, other)


@dataclass(frozen=True)
class MonicModulus:
    """
    Monic f = X^n + a_{n-1} X^{n-1} + ... + a_0 with n >= 1.

    Over a noncommutative ring the a_i must be central. That is a documented
    precondition and is not checked.
    """

    inner: DensePolynomial

    def __post_init__(self):
        if self.inner.degree < 1:
            raise InvalidModulusError(
                f"modulus must have degree >= 1, got degree {self.inner.degree}"
            )
        if not self.inner.ring.is_one(self.inner.coefficients[-1]):
            raise InvalidModulusError("modulus must be monic (leading coefficient 1)")

    @classmethod
    def of(cls, ring: Ring, values: Sequence) -> "MonicModulus":
        return cls(DensePolynomial.of(ring, values))

    @property
    def ring(self) -> Ring:
        return self.inner.ring

    @property
    def n(self) -> int:
        return self.inner.degree

    @property
    def low(self) -> Tuple[RingValue, ...]:
        """a_0, ..., a_{n-1}."""
        return self.inner.coefficients[:-1]


def poly_add(p: DensePolynomial, q: DensePolynomial) -> DensePolynomial:
    check_same_ring(p.ring, q.ring)
    ring = p.ring
    size = max(len(p.coefficients), len(q.coefficients))
    return DensePolynomial(
        ring,
        tuple(ring.add(p.coefficient(i), q.coefficient(i)) for i in range(size)),
    )


def poly_neg(p: DensePolynomial) -> DensePolynomial:
    return DensePolynomial(p.ring, tuple(p.ring.neg(c) for c in p.coefficients))


def poly_sub(p: DensePolynomial, q: DensePolynomial) -> DensePolynomial:
    return poly_add(p, poly_neg(q))


def poly_scale(c: RingValue, p: DensePolynomial) -> DensePolynomial:
    """Left scalar multiple c*p."""
    check_member(p.ring, c)
    return DensePolynomial(p.ring, tuple(p.ring.mul(c, a) for a in p.coefficients))


def poly_mul(p: DensePolynomial, q: DensePolynomial) -> DensePolynomial:
    """Schoolbook convolution; each term is p_i * q_j with p on the left."""
    check_same_ring(p.ring, q.ring)
    ring = p.ring
    if p.is_zero() or q.is_zero():
        return DensePolynomial(ring)

    product = [ring.zero()] * (len(p.coefficients) + len(q.coefficients) - 1)
    for i, a in enumerate(p.coefficients):
        if ring.is_zero(a):
            continue
        for j, b in enumerate(q.coefficients):
            product[i + j] = ring.add(product[i + j], ring.mul(a, b))
    return DensePolynomial(ring, tuple(product))


def divmod_monic(
    p: DensePolynomial, f: MonicModulus
) -> Tuple[DensePolynomial, DensePolynomial]:
    """
    Long division by a monic modulus.

    Only ring multiplications and subtractions are needed because the leading
    coefficient of f is 1, so this works over any ring with identity.

    Returns:
        (quotient, remainder) with p = quotient*f + remainder, deg remainder < n
    """
    check_same_ring(p.ring, f.ring)
    ring = p.ring
    n = f.n
    low = f.low
    if p.degree < n:
        return DensePolynomial(ring), p

    remainder = list(p.coefficients)
    quotient = [ring.zero()] * (p.degree - n + 1)
    for top in range(p.degree, n - 1, -1):
        lead = remainder[top]
        if ring.is_zero(lead):
            continue
        shift = top - n
        quotient[shift] = lead
        for j, a in enumerate(low):
            remainder[shift + j] = ring.sub(remainder[shift + j], ring.mul(lead, a))
        remainder[top] = ring.zero()

    return DensePolynomial(ring, tuple(quotient)), DensePolynomial(
        ring, tuple(remainder[:n])
    )


def poly_eval(p: DensePolynomial, point: RingValue, point_ring: Ring) -> RingValue:
    """
    Horner evaluation of p at a point of point_ring.

    point_ring is either p.ring itself or matrix(k, p.ring); in the latter
    case every coefficient c enters as the scalar matrix c*I.
    """
    if point_ring == p.ring:
        embed = None
    elif isinstance(point_ring, MatrixRing) and point_ring.base == p.ring:
        embed = point_ring.scalar
    else:
        raise UsageError(
            f"cannot evaluate a polynomial over {p.ring.describe()} "
            f"at a point of {point_ring.describe()}"
        )
    check_member(point_ring, point)

    value = point_ring.zero()
    for c in reversed(p.coefficients):
        value = point_ring.mul(value, point)
        value = point_ring.add(value, embed(c) if embed else c)
    return value


def lift_coordinates(ring: Ring, coords: Sequence[RingValue]) -> DensePolynomial:
    """Read a coordinate vector as the polynomial sum coords[i] X^i."""
    return DensePolynomial(ring, tuple(coords))
