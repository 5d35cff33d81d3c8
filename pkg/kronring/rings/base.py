"""
Coefficient Ring Contract

Every coefficient ring R is described by a frozen, hashable descriptor that
carries the arithmetic for its values. Values themselves are plain immutable
Python objects (Fraction, int, nested tuples), always kept in canonical form
so that equality is structural.

Multiplication order matters: mul(x, y) is x*y with x on the left.
"""

import logging
import random
from abc import ABC, abstractmethod
from typing import Any, Sequence

from kronring.core.exceptions import RingMismatchError

logger = logging.getLogger(__name__)

RingValue = Any


class Ring(ABC):
    """Abstract descriptor of a ring with identity."""

    @property
    @abstractmethod
    def commutative(self) -> bool:
        """Whether x*y == y*x for all values of the ring."""

    @abstractmethod
    def describe(self) -> str:
        """Selection string of the ring, e.g. 'mod:7' or 'mat:2:rational'."""

    @abstractmethod
    def contains(self, x: RingValue) -> bool:
        """Whether x is a canonical value of this ring."""

    @abstractmethod
    def coerce(self, x: Any) -> RingValue:
        """Bring an integer (or a ring-native payload) into canonical form."""

    @abstractmethod
    def zero(self) -> RingValue:
        ...

    @abstractmethod
    def one(self) -> RingValue:
        ...

    @abstractmethod
    def add(self, x: RingValue, y: RingValue) -> RingValue:
        ...

    @abstractmethod
    def neg(self, x: RingValue) -> RingValue:
        ...

    @abstractmethod
    def mul(self, x: RingValue, y: RingValue) -> RingValue:
        ...

    @abstractmethod
    def random(self, rng: random.Random) -> RingValue:
        """Draw a value from the seeded stream rng."""

    @abstractmethod
    def parse_literal(self, text: str, offset: int = 0) -> RingValue:
        """Parse one coefficient literal; offset locates text inside a larger input."""

    @abstractmethod
    def format(self, x: RingValue) -> str:
        """Render x in the literal syntax accepted by parse_literal."""

    def sub(self, x: RingValue, y: RingValue) -> RingValue:
        return self.add(x, self.neg(y))

    def eq(self, x: RingValue, y: RingValue) -> bool:
        return x == y

    def is_zero(self, x: RingValue) -> bool:
        return x == self.zero()

    def is_one(self, x: RingValue) -> bool:
        return x == self.one()

    def dot(self, xs: Sequence[RingValue], ys: Sequence[RingValue]) -> RingValue:
        """Sum of xs[t]*ys[t], left factors taken from xs."""
        total = self.zero()
        for x, y in zip(xs, ys):
            total = self.add(total, self.mul(x, y))
        return total

    def sum(self, xs: Sequence[RingValue]) -> RingValue:
        total = self.zero()
        for x in xs:
            total = self.add(total, x)
        return total

    def __str__(self) -> str:
        return self.describe()


def check_member(r: Ring, *values: RingValue) -> None:
    """Raise RingMismatchError unless every value belongs to r."""
    for x in values:
        if not r.contains(x):
            raise RingMismatchError(f"{x!r} is not a value of ring {r.describe()}")


def check_same_ring(r: Ring, s: Ring) -> None:
    if r != s:
        raise RingMismatchError(
            f"ring mismatch: {r.describe()} vs {s.describe()}"
        )


def ring_add(r: Ring, x: RingValue, y: RingValue) -> RingValue:
    """Exact canonical sum x + y."""
    check_member(r, x, y)
    return r.add(x, y)


def ring_sub(r: Ring, x: RingValue, y: RingValue) -> RingValue:
    check_member(r, x, y)
    return r.sub(x, y)


def ring_mul(r: Ring, x: RingValue, y: RingValue) -> RingValue:
    """Exact canonical product x*y, x on the left."""
    check_member(r, x, y)
    return r.mul(x, y)


def ring_neg(r: Ring, x: RingValue) -> RingValue:
    check_member(r, x)
    return r.neg(x)


def ring_zero(r: Ring) -> RingValue:
    return r.zero()


def ring_one(r: Ring) -> RingValue:
    return r.one()


def ring_eq(r: Ring, x: RingValue, y: RingValue) -> bool:
    """Structural equality of canonical forms."""
    check_member(r, x, y)
    return r.eq(x, y)


def ring_dot(r: Ring, xs: Sequence[RingValue], ys: Sequence[RingValue]) -> RingValue:
    check_member(r, *xs, *ys)
    return r.dot(xs, ys)


def random_value(r: Ring, rng: random.Random) -> RingValue:
    """Deterministic draw: the same seeded stream position yields the same value."""
    return r.random(rng)
