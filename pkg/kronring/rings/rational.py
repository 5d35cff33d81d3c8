"""
Rational Ring

Arbitrary-precision rationals backed by fractions.Fraction, which keeps
gcd(|p|, q) = 1 and q > 0 after every operation.
"""

import operator
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from kronring.core.exceptions import CoefficientLiteralError
from kronring.rings.base import Ring

_RATIONAL_LITERAL = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


@dataclass(frozen=True)
class RationalRing(Ring):
    """The field Q, used here only as a commutative ring with identity."""

    @property
    def commutative(self) -> bool:
        return True

    def describe(self) -> str:
        return "rational"

    def contains(self, x: Any) -> bool:
        return isinstance(x, Fraction)

    def coerce(self, x: Any) -> Fraction:
        return Fraction(x)

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def add(self, x: Fraction, y: Fraction) -> Fraction:
        return x + y

    def sub(self, x: Fraction, y: Fraction) -> Fraction:
        return x - y

    def neg(self, x: Fraction) -> Fraction:
        return -x

    def mul(self, x: Fraction, y: Fraction) -> Fraction:
        return x * y

    def is_zero(self, x: Fraction) -> bool:
        return x == 0

    def dot(self, xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Fraction:
        return sum(map(operator.mul, xs, ys), Fraction(0))

    def random(self, rng: random.Random) -> Fraction:
        numerator = rng.randint(-9, 9)
        denominator = rng.randint(1, 9)
        return Fraction(numerator, denominator)

    def parse_literal(self, text: str, offset: int = 0) -> Fraction:
        match = _RATIONAL_LITERAL.match(text.strip())
        if not match:
            raise CoefficientLiteralError(
                f"invalid rational literal {text.strip()!r}", offset
            )
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) else 1
        if denominator == 0:
            raise CoefficientLiteralError("zero denominator", offset)
        return Fraction(numerator, denominator)

    def format(self, x: Fraction) -> str:
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
