"""
Polynomial Text Format

Grammar (whitespace insignificant):
    polynomial := [sign] term (sign term)*
    term       := coefficient ['*' monomial] | monomial
    monomial   := 'x' ['^' digits]
Coefficient literals follow the ring (rational p/q, decimal residue,
bracketed matrix). The list form [c0, c1, ..., ck] in ascending order is
accepted wherever a polynomial is.
"""

import logging
from typing import Dict, List, Optional, Tuple

from kronring.algebra.poly import DensePolynomial
from kronring.core.config import settings
from kronring.core.exceptions import CoefficientLiteralError, PolynomialSyntaxError
from kronring.rings import MatrixRing, RationalRing, Ring, RingValue

logger = logging.getLogger(__name__)

_VARIABLES = "xX"


def _matching_bracket(text: str, start: int) -> int:
    """Index of the ']' closing the '[' at start, or -1."""
    depth = 0
    for i in range(start, len(text)):
        if text[i] == "[":
            depth += 1
        elif text[i] == "]":
            depth -= 1
            if depth == 0:
                return i
    return -1


def split_top_level(text: str, separator: str = ",") -> List[Tuple[str, int]]:
    """Split on separators outside brackets; returns (piece, offset) pairs."""
    pieces: List[Tuple[str, int]] = []
    depth = 0
    begin = 0
    for i, char in enumerate(text):
        if char == "[":
            depth += 1
        elif char == "]":
            depth -= 1
        elif char == separator and depth == 0:
            pieces.append((text[begin:i], begin))
            begin = i + 1
    pieces.append((text[begin:], begin))
    return pieces


class _Scanner:
    """Cursor over the input that skips whitespace between tokens."""

    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> Optional[str]:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def error(self, message: str) -> PolynomialSyntaxError:
        return PolynomialSyntaxError(message, self.pos)

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start : self.pos]

    def coefficient(self) -> RingValue:
        start = self.pos
        if self.text[self.pos] == "[":
            end = _matching_bracket(self.text, self.pos)
            if end < 0:
                raise self.error("unbalanced '['")
            self.pos = end + 1
        else:
            self.digits()
            if self.pos < len(self.text) and self.text[self.pos] == "/":
                self.pos += 1
                if not self.digits():
                    raise self.error("expected denominator digits")
        return self.ring.parse_literal(self.text[start : self.pos], start)

    def monomial(self) -> int:
        self.pos += 1  # the variable
        if self.peek() != "^":
            return 1
        self.pos += 1
        self.skip()
        start = self.pos
        exponent = self.digits()
        if not exponent:
            raise self.error("expected exponent digits")
        limit = settings.MAX_PARSE_DEGREE
        if len(exponent.lstrip("0")) > len(str(limit)) or int(exponent) > limit:
            raise PolynomialSyntaxError(
                f"exponent exceeds the limit of {limit}", start
            )
        return int(exponent)

    def term(self) -> Tuple[int, RingValue]:
        char = self.peek()
        if char is None:
            raise self.error("expected a term")
        if char in _VARIABLES:
            return self.monomial(), self.ring.one()
        if not (char.isdigit() or char == "["):
            raise self.error(f"unexpected character {char!r}")

        value = self.coefficient()
        char = self.peek()
        if char == "*":
            self.pos += 1
            if self.peek() is None or self.peek() not in _VARIABLES:
                raise self.error("expected 'x' after '*'")
            return self.monomial(), value
        if char is not None and char in _VARIABLES:
            return self.monomial(), value
        return 0, value


def _from_terms(ring: Ring, terms: Dict[int, RingValue]) -> DensePolynomial:
    if not terms:
        return DensePolynomial(ring)
    top = max(terms)
    return DensePolynomial(
        ring, tuple(terms.get(i, ring.zero()) for i in range(top + 1))
    )


def _parse_coefficient_list(text: str, ring: Ring) -> DensePolynomial:
    begin = text.index("[")
    end = text.rindex("]")
    body = text[begin + 1 : end]
    if not body.strip():
        return DensePolynomial(ring)
    values = [
        ring.parse_literal(piece, begin + 1 + offset)
        for piece, offset in split_top_level(body)
    ]
    return DensePolynomial(ring, tuple(values))


def _is_matrix_literal(ring: Ring, text: str) -> bool:
    if not isinstance(ring, MatrixRing):
        return False
    try:
        ring.parse_literal(text)
    except CoefficientLiteralError:
        return False
    return True


def parse_polynomial(text: str, ring: Ring) -> DensePolynomial:
    """
    Parse polynomial text over ring.

    Repeated terms of the same degree are summed and the result is normalized.

    Raises:
        PolynomialSyntaxError: With the offset of the first offending character
        CoefficientLiteralError: If a coefficient literal is invalid for ring
    """
    stripped = text.strip()
    if stripped.startswith("["):
        lead = text.index("[")
        if _matching_bracket(text, lead) == len(text.rstrip()) - 1 and not (
            _is_matrix_literal(ring, stripped)
        ):
            return _parse_coefficient_list(text, ring)

    scanner = _Scanner(text, ring)
    terms: Dict[int, RingValue] = {}
    first = True
    while True:
        char = scanner.peek()
        if char is None:
            if first:
                raise scanner.error("empty polynomial")
            break
        negative = False
        if char in "+-":
            negative = char == "-"
            scanner.pos += 1
        elif not first:
            raise scanner.error(f"expected '+' or '-', found {char!r}")

        degree, value = scanner.term()
        if negative:
            value = ring.neg(value)
        terms[degree] = ring.add(terms.get(degree, ring.zero()), value)
        first = False

    logger.debug(f"Parsed polynomial {text!r} with {len(terms)} distinct degrees")
    return _from_terms(ring, terms)


def _monomial(i: int) -> str:
    if i == 0:
        return ""
    if i == 1:
        return "x"
    return f"x^{i}"


def format_polynomial(p: DensePolynomial) -> str:
    """Render p in ascending order; parse_polynomial inverts this."""
    if p.is_zero():
        return "0"

    ring = p.ring
    signed = isinstance(ring, RationalRing)
    parts: List[str] = []
    for i, c in enumerate(p.coefficients):
        if ring.is_zero(c):
            continue
        negative = signed and c < 0
        magnitude = ring.neg(c) if negative else c
        if i > 0 and ring.is_one(magnitude):
            body = _monomial(i)
        elif i == 0:
            body = ring.format(magnitude)
        else:
            body = f"{ring.format(magnitude)}*{_monomial(i)}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts)
