"""
Matrix Ring

k x k matrices over a commutative scalar ring. Values are tuples of row
tuples. Nesting stops at one level: the base must itself be commutative,
which rules out matrices of matrices.

Literal syntax: row-major, rows separated by ';' and entries by ',',
e.g. [[1,0];[0,1]]. A bare scalar literal denotes the scalar matrix c*I.
"""

import random
from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

from kronring.core.exceptions import CoefficientLiteralError, UsageError
from kronring.rings.base import Ring, RingValue

Matrix = Tuple[Tuple[RingValue, ...], ...]


@dataclass(frozen=True)
class MatrixRing(Ring):
    """M_k(base) with the usual matrix product."""

    k: int
    base: Ring

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise UsageError(f"matrix size must be an integer >= 1, got {self.k!r}")
        if isinstance(self.base, MatrixRing):
            raise UsageError("matrix rings nest one level only")
        if not self.base.commutative:
            raise UsageError(
                f"matrix base ring must be commutative, got {self.base.describe()}"
            )

    @property
    def commutative(self) -> bool:
        return self.k == 1 and self.base.commutative

    def describe(self) -> str:
        return f"mat:{self.k}:{self.base.describe()}"

    def contains(self, x: Any) -> bool:
        if not isinstance(x, tuple) or len(x) != self.k:
            return False
        for row in x:
            if not isinstance(row, tuple) or len(row) != self.k:
                return False
            if not all(self.base.contains(entry) for entry in row):
                return False
        return True

    def coerce(self, x: Any) -> Matrix:
        if isinstance(x, (list, tuple)):
            if len(x) != self.k or any(len(row) != self.k for row in x):
                raise UsageError(f"expected a {self.k}x{self.k} payload")
            return tuple(tuple(self.base.coerce(e) for e in row) for row in x)
        return self.scalar(self.base.coerce(x))

    def scalar(self, c: RingValue) -> Matrix:
        """Embed a base value as the scalar matrix c*I."""
        zero = self.base.zero()
        return tuple(
            tuple(c if i == j else zero for j in range(self.k)) for i in range(self.k)
        )

    def zero(self) -> Matrix:
        return self.scalar(self.base.zero())

    def one(self) -> Matrix:
        return self.scalar(self.base.one())

    def add(self, x: Matrix, y: Matrix) -> Matrix:
        add = self.base.add
        return tuple(
            tuple(add(a, b) for a, b in zip(row_x, row_y)) for row_x, row_y in zip(x, y)
        )

    def neg(self, x: Matrix) -> Matrix:
        neg = self.base.neg
        return tuple(tuple(neg(a) for a in row) for row in x)

    def mul(self, x: Matrix, y: Matrix) -> Matrix:
        columns = list(zip(*y))
        dot = self.base.dot
        return tuple(tuple(dot(row, col) for col in columns) for row in x)

    def random(self, rng: random.Random) -> Matrix:
        return tuple(
            tuple(self.base.random(rng) for _ in range(self.k)) for _ in range(self.k)
        )

    def parse_literal(self, text: str, offset: int = 0) -> Matrix:
        literal = text.strip()
        lead = offset + (len(text) - len(text.lstrip()))
        if not literal.startswith("["):
            return self.scalar(self.base.parse_literal(literal, lead))
        if not literal.endswith("]"):
            raise CoefficientLiteralError("unterminated matrix literal", lead)

        rows: List[Tuple[RingValue, ...]] = []
        position = lead + 1
        for row_text in literal[1:-1].split(";"):
            stripped = row_text.strip()
            row_at = position + (len(row_text) - len(row_text.lstrip()))
            if not (stripped.startswith("[") and stripped.endswith("]")):
                raise CoefficientLiteralError("matrix row must be bracketed", row_at)
            entries = []
            entry_at = row_at + 1
            for entry_text in stripped[1:-1].split(","):
                entries.append(self.base.parse_literal(entry_text, entry_at))
                entry_at += len(entry_text) + 1
            if len(entries) != self.k:
                raise CoefficientLiteralError(
                    f"matrix row has {len(entries)} entries, expected {self.k}", row_at
                )
            rows.append(tuple(entries))
            position += len(row_text) + 1
        if len(rows) != self.k:
            raise CoefficientLiteralError(
                f"matrix literal has {len(rows)} rows, expected {self.k}", lead
            )
        return tuple(rows)

    def format(self, x: Matrix) -> str:
        rows = ("[" + ",".join(self.base.format(e) for e in row) + "]" for row in x)
        return "[" + ";".join(rows) + "]"

    def transpose(self, x: Matrix) -> Matrix:
        return tuple(zip(*x))

    def entries(self, x: Matrix) -> Sequence[RingValue]:
        return [e for row in x for e in row]
