"""
Seeded Sampling

Random polynomials, moduli and elements drawn from a random.Random stream,
shared by the verification suite, the benchmark and the tests.
"""

import random
from typing import Optional

from kronring.algebra.extension import ExtElement, ExtensionContext
from kronring.algebra.poly import DensePolynomial, MonicModulus
from kronring.rings import MatrixRing, Ring, RingValue


def random_scalar(ring: Ring, rng: random.Random) -> RingValue:
    """A random central value: scalar matrices for matrix rings."""
    if isinstance(ring, MatrixRing):
        return ring.scalar(ring.base.random(rng))
    return ring.random(rng)


def random_polynomial(
    ring: Ring, length: int, rng: random.Random, central: bool = False
) -> DensePolynomial:
    """Up to `length` random coefficients (degree < length after normalizing)."""
    draw = random_scalar if central else (lambda r, g: r.random(g))
    return DensePolynomial(ring, tuple(draw(ring, rng) for _ in range(length)))


def random_monic(
    ring: Ring, n: int, rng: random.Random, central: Optional[bool] = None
) -> MonicModulus:
    """
    Monic modulus of degree n with random lower coefficients.

    Over noncommutative rings the coefficients default to scalar matrices so
    that they are central.
    """
    if central is None:
        central = not ring.commutative
    low = random_polynomial(ring, n, rng, central).padded(n)
    return MonicModulus(DensePolynomial(ring, low + (ring.one(),)))


def random_element(ctx: ExtensionContext, rng: random.Random) -> ExtElement:
    ring = ctx.ring
    return ExtElement(ctx, tuple(ring.random(rng) for _ in range(ctx.n)))
