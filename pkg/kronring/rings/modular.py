"""
Modular Ring

Integers modulo m for any m >= 2. Composite m is allowed on purpose: the
extension arithmetic only needs a ring with identity, and zero divisors are
worth exercising.
"""

import operator
import random
import re
from dataclasses import dataclass
from typing import Any, Sequence

from kronring.core.exceptions import CoefficientLiteralError, UsageError
from kronring.rings.base import Ring

_RESIDUE_LITERAL = re.compile(r"^[+-]?\d+$")


@dataclass(frozen=True)
class ModularRing(Ring):
    """Z/mZ with residues stored as ints in [0, m)."""

    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise UsageError(f"modulus must be an integer >= 2, got {self.m!r}")

    @property
    def commutative(self) -> bool:
        return True

    def describe(self) -> str:
        return f"mod:{self.m}"

    def contains(self, x: Any) -> bool:
        return type(x) is int and 0 <= x < self.m

    def coerce(self, x: Any) -> int:
        return int(x) % self.m

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.m

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.m

    def neg(self, x: int) -> int:
        return -x % self.m

    def mul(self, x: int, y: int) -> int:
        return x * y % self.m

    def is_zero(self, x: int) -> bool:
        return x == 0

    def dot(self, xs: Sequence[int], ys: Sequence[int]) -> int:
        # one reduction for the whole sum
        return sum(map(operator.mul, xs, ys)) % self.m

    def sum(self, xs: Sequence[int]) -> int:
        return sum(xs) % self.m

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.m)

    def parse_literal(self, text: str, offset: int = 0) -> int:
        literal = text.strip()
        if not _RESIDUE_LITERAL.match(literal):
            raise CoefficientLiteralError(
                f"invalid residue literal {literal!r} for mod:{self.m}", offset
            )
        return int(literal) % self.m

    def format(self, x: int) -> str:
        return str(x)
