"""
Companion Matrices

Dense matrices over a coefficient ring, the companion matrix C of a monic
modulus, the structure matrix M_f = (I C ... C^(n-1)) and the left
Kronecker product that feeds it.

Note on orientation: the left Kronecker product used throughout has block j
equal to x * y_j, i.e. entry (j-1)n + i is x_i * y_j. This is the
conventional Kronecker product y (x) x with the factors swapped.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from kronring.algebra.poly import DensePolynomial, MonicModulus
from kronring.core.config import settings
from kronring.core.exceptions import DegreeTooLargeError, ShapeMismatchError
from kronring.rings import Ring, RingValue, check_same_ring

logger = logging.getLogger(__name__)

Vector = Tuple[RingValue, ...]


@dataclass(frozen=True)
class DenseMatrix:
    """Row-major dense matrix; rows is a tuple of equally long row tuples."""

    ring: Ring
    rows: Tuple[Vector, ...]

    def __post_init__(self):
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise ShapeMismatchError("ragged matrix rows")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_rows, self.n_cols

    def entry(self, i: int, j: int) -> RingValue:
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> List[Vector]:
        return [tuple(col) for col in zip(*self.rows)]


def matrix_from_columns(ring: Ring, columns: Sequence[Sequence[RingValue]]) -> DenseMatrix:
    return DenseMatrix(ring, tuple(zip(*columns)))


def identity_matrix(ring: Ring, n: int) -> DenseMatrix:
    zero, one = ring.zero(), ring.one()
    return DenseMatrix(
        ring, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
    )


def zero_matrix(ring: Ring, n_rows: int, n_cols: int) -> DenseMatrix:
    zero = ring.zero()
    return DenseMatrix(ring, tuple((zero,) * n_cols for _ in range(n_rows)))


def transpose(a: DenseMatrix) -> DenseMatrix:
    return DenseMatrix(a.ring, tuple(zip(*a.rows)))


def matrix_add(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    check_same_ring(a.ring, b.ring)
    if a.shape != b.shape:
        raise ShapeMismatchError(f"cannot add {a.shape} and {b.shape} matrices")
    add = a.ring.add
    return DenseMatrix(
        a.ring,
        tuple(
            tuple(add(x, y) for x, y in zip(row_a, row_b))
            for row_a, row_b in zip(a.rows, b.rows)
        ),
    )


def mat_mul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Dense product; every term is an A-entry times a B-entry."""
    check_same_ring(a.ring, b.ring)
    if a.n_cols != b.n_rows:
        raise ShapeMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    dot = a.ring.dot
    columns = list(zip(*b.rows))
    if not columns:
        return DenseMatrix(a.ring, tuple(() for _ in a.rows))
    return DenseMatrix(
        a.ring, tuple(tuple(dot(row, col) for col in columns) for row in a.rows)
    )


def mat_vec(a: DenseMatrix, v: Sequence[RingValue]) -> Vector:
    if a.n_cols != len(v):
        raise ShapeMismatchError(
            f"cannot apply a {a.shape} matrix to a vector of length {len(v)}"
        )
    dot = a.ring.dot
    return tuple(dot(row, v) for row in a.rows)


def matrix_power(a: DenseMatrix, exponent: int) -> DenseMatrix:
    """a^exponent by square-and-multiply (exponent >= 0)."""
    if a.n_rows != a.n_cols:
        raise ShapeMismatchError("matrix power needs a square matrix")
    result = identity_matrix(a.ring, a.n_rows)
    base = a
    while exponent > 0:
        if exponent & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        exponent >>= 1
    return result


@dataclass(frozen=True)
class CompanionMatrix:
    """C with ones on the subdiagonal and -a_0, ..., -a_{n-1} in the last column."""

    modulus: MonicModulus
    matrix: DenseMatrix
    last_column: Vector = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "last_column", self.matrix.column(self.modulus.n - 1))

    @property
    def n(self) -> int:
        return self.modulus.n

    @property
    def ring(self) -> Ring:
        return self.modulus.ring


def companion_of(f: MonicModulus) -> CompanionMatrix:
    ring = f.ring
    n = f.n
    zero, one = ring.zero(), ring.one()
    rows: List[List[RingValue]] = [[zero] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = one
    for i, a in enumerate(f.low):
        rows[i][n - 1] = ring.neg(a)
    if settings.INJECT_COMPANION_FAULT:
        logger.warning("INJECT_COMPANION_FAULT is set: companion matrix is wrong")
        rows[0][n - 1] = f.low[0]
    return CompanionMatrix(f, DenseMatrix(ring, tuple(tuple(r) for r in rows)))


def companion_matvec(c: CompanionMatrix, v: Sequence[RingValue]) -> Vector:
    """
    C*v in O(n) ring operations.

    out_1 = -a_0 v_n and out_i = v_{i-1} - a_{i-1} v_n, the modulus
    coefficient on the left of v_n.
    """
    if len(v) != c.n:
        raise ShapeMismatchError(f"expected a vector of length {c.n}, got {len(v)}")
    ring = c.ring
    top = v[-1]
    last = c.last_column
    out = [ring.mul(last[0], top)]
    for i in range(1, c.n):
        out.append(ring.add(v[i - 1], ring.mul(last[i], top)))
    return tuple(out)


def _power_columns(c: CompanionMatrix, count: int) -> List[Vector]:
    """C^t e_1 for t = 0, ..., count-1 by repeated companion_matvec."""
    ring = c.ring
    zero, one = ring.zero(), ring.one()
    column = (one,) + (zero,) * (c.n - 1)
    columns = [column]
    for _ in range(count - 1):
        column = companion_matvec(c, column)
        columns.append(column)
    return columns


@dataclass(frozen=True, eq=False)
class StructureMatrix:
    """M_f: n x n^2, block j (1-indexed) equal to C^(j-1)."""

    modulus: MonicModulus
    matrix: DenseMatrix

    @property
    def n(self) -> int:
        return self.modulus.n

    def block(self, j: int) -> DenseMatrix:
        """Block j, 1-indexed, as an n x n matrix."""
        n = self.n
        lo = (j - 1) * n
        return DenseMatrix(
            self.matrix.ring, tuple(row[lo : lo + n] for row in self.matrix.rows)
        )


def structure_matrix(
    f: MonicModulus, companion: Optional[CompanionMatrix] = None
) -> StructureMatrix:
    """
    Build M_f column by column with companion_matvec.

    Column k of block j is C^(j-1) e_k = C^(j+k-2) e_1, so the n^2 columns are
    drawn from only 2n-1 distinct power columns.
    """
    c = companion or companion_of(f)
    n = f.n
    powers = _power_columns(c, 2 * n - 1)
    rows = tuple(
        tuple(powers[j + k][r] for j in range(n) for k in range(n)) for r in range(n)
    )
    logger.debug(f"Built {n}x{n * n} structure matrix")
    return StructureMatrix(f, DenseMatrix(f.ring, rows))


def structure_blocks(s: StructureMatrix) -> List[DenseMatrix]:
    return [s.block(j) for j in range(1, s.n + 1)]


def kronecker_left(
    ring: Ring, x: Sequence[RingValue], y: Sequence[RingValue]
) -> Vector:
    """Left Kronecker product: entry (j-1)n + i is x_i * y_j, x_i on the left."""
    if len(x) != len(y):
        raise ShapeMismatchError(
            f"Kronecker factors differ in length: {len(x)} vs {len(y)}"
        )
    mul = ring.mul
    return tuple(mul(xi, yj) for yj in y for xi in x)


def circulant_of(g: DensePolynomial, n: int) -> DenseMatrix:
    """
    n x n circulant with first column [g] padded to length n; each further
    column is the previous one shifted cyclically down by one.
    """
    if g.degree >= n:
        raise DegreeTooLargeError(f"circulant needs deg g < {n}, got {g.degree}")
    first = g.padded(n)
    return DenseMatrix(
        g.ring, tuple(tuple(first[(r - c) % n] for c in range(n)) for r in range(n))
    )
