"""
Exact matrices over a commutative ring.

RingMatrix holds ints, Fractions or MultiPolys; all entries of one matrix
come from the same ring. The module also provides binary powering and an
exact Gaussian-elimination solver for rational linear systems.
"""

import logging
from fractions import Fraction
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple

from .polynomials import canonical_number
from .types import Rational

logger = logging.getLogger(__name__)


class RingMatrix:
    """
    Immutable rectangular matrix with explicit dimensions.

    ``zero`` and ``one`` are the additive and multiplicative identities of
    the entry ring; they default to the integers.
    """

    __slots__ = ("rows", "n_rows", "n_cols", "zero", "one")

    def __init__(
        self,
        rows: Iterable[Iterable[Any]],
        zero: Any = 0,
        one: Any = 1,
        n_cols: Optional[int] = None,
    ):
        self.rows: Tuple[Tuple[Any, ...], ...] = tuple(tuple(r) for r in rows)
        self.n_rows = len(self.rows)
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("All matrix rows must have the same length")
        self.n_cols = widths.pop() if widths else (n_cols or 0)
        self.zero = zero
        self.one = one

    @classmethod
    def identity(cls, dim: int, zero: Any = 0, one: Any = 1) -> "RingMatrix":
        return cls(
            ([one if i == j else zero for j in range(dim)] for i in range(dim)),
            zero,
            one,
            n_cols=dim,
        )

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int, zero: Any = 0, one: Any = 1) -> "RingMatrix":
        return cls(([zero] * n_cols for _ in range(n_rows)), zero, one, n_cols=n_cols)

    @classmethod
    def from_function(
        cls,
        n_rows: int,
        n_cols: int,
        entry: Callable[[int, int], Any],
        zero: Any = 0,
        one: Any = 1,
    ) -> "RingMatrix":
        return cls(
            ([entry(i, j) for j in range(n_cols)] for i in range(n_rows)),
            zero,
            one,
            n_cols=n_cols,
        )

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    @property
    def dimension(self) -> int:
        if not self.is_square:
            raise ValueError(f"Matrix is {self.n_rows}x{self.n_cols}, not square")
        return self.n_rows

    def __getitem__(self, index: Tuple[int, int]) -> Any:
        i, j = index
        return self.rows[i][j]

    def row(self, i: int) -> Tuple[Any, ...]:
        return self.rows[i]

    def column(self, j: int) -> Tuple[Any, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "RingMatrix":
        return RingMatrix(
            (self.column(j) for j in range(self.n_cols)), self.zero, self.one, n_cols=self.n_rows
        )

    def map(self, func: Callable[[Any], Any], zero: Any = None, one: Any = None) -> "RingMatrix":
        """Apply ``func`` entrywise, e.g. to evaluate weight polynomials."""
        return RingMatrix(
            ([func(x) for x in r] for r in self.rows),
            self.zero if zero is None else zero,
            self.one if one is None else one,
            n_cols=self.n_cols,
        )

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "RingMatrix":
        """Entry (i, j) of the result is entry (row_perm[i], col_perm[j]) of self."""
        return RingMatrix(
            ([self.rows[pi][pj] for pj in col_perm] for pi in row_perm),
            self.zero,
            self.one,
            n_cols=len(col_perm),
        )

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise ValueError("Matrix dimensions do not match")
        return RingMatrix(
            ([a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)),
            self.zero,
            self.one,
            n_cols=self.n_cols,
        )

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.n_cols != other.n_rows:
            raise ValueError(
                f"Cannot multiply {self.n_rows}x{self.n_cols} by {other.n_rows}x{other.n_cols}"
            )
        columns = [other.column(j) for j in range(other.n_cols)]
        zero = self.zero
        out = []
        for r in self.rows:
            nonzero = [(k, a) for k, a in enumerate(r) if a != zero]
            out.append([
                sum((a * col[k] for k, a in nonzero if col[k] != zero), zero)
                for col in columns
            ])
        return RingMatrix(out, zero, self.one, n_cols=other.n_cols)

    __mul__ = __matmul__

    def vector_product(self, vector: Sequence[Any]) -> List[Any]:
        """Row vector times matrix: result[j] = sum_i vector[i] * self[i, j]."""
        if len(vector) != self.n_rows:
            raise ValueError("Vector length does not match the matrix rows")
        out = [self.zero] * self.n_cols
        for i, x in enumerate(vector):
            if x == self.zero:
                continue
            for j, a in enumerate(self.rows[i]):
                if a != self.zero:
                    out[j] = out[j] + x * a
        return out

    def trace(self) -> Any:
        return sum((self.rows[i][i] for i in range(self.dimension)), self.zero)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"RingMatrix({self.n_rows}x{self.n_cols})"


def mat_pow(matrix: RingMatrix, k: int) -> RingMatrix:
    """
    M^k by binary exponentiation; M^0 is the identity.

    Args:
        matrix: A square matrix
        k: Nonnegative exponent

    Returns:
        The k-th power
    """
    if k < 0:
        raise ValueError("Matrix powers must be nonnegative")
    dim = matrix.dimension
    result = RingMatrix.identity(dim, matrix.zero, matrix.one)
    base = matrix
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def solve_linear_exact(
    rows: Sequence[Sequence[Rational]],
    rhs: Sequence[Rational],
    n_unknowns: Optional[int] = None,
) -> Optional[List[Rational]]:
    """
    Solve A x = b exactly over the rationals.

    Rational Gauss-Jordan elimination; the pivot in each column is the first
    row (in order) with a nonzero entry there, so results are reproducible.
    Free variables are set to zero. Any number of rows is accepted.

    Args:
        rows: Coefficient matrix A as a list of rows
        rhs: Right-hand side b
        n_unknowns: Number of unknowns, needed only when there are no rows

    Returns:
        A solution vector, or None if the system is inconsistent
    """
    if len(rows) != len(rhs):
        raise ValueError("Coefficient rows and right-hand side differ in length")
    n_cols = len(rows[0]) if rows else (n_unknowns or 0)
    if n_unknowns is not None and n_cols != n_unknowns:
        raise ValueError("Row length does not match the number of unknowns")
    augmented = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots: List[Tuple[int, int]] = []
    rank = 0
    for col in range(n_cols):
        pivot_row = next(
            (r for r in range(rank, len(augmented)) if augmented[r][col] != 0), None
        )
        if pivot_row is None:
            continue
        augmented[rank], augmented[pivot_row] = augmented[pivot_row], augmented[rank]
        pivot = augmented[rank]
        inverse = 1 / pivot[col]
        for k in range(col, n_cols + 1):
            pivot[k] *= inverse
        for r, other in enumerate(augmented):
            if r == rank or other[col] == 0:
                continue
            factor = other[col]
            for k in range(col, n_cols + 1):
                if pivot[k]:
                    other[k] -= factor * pivot[k]
        pivots.append((rank, col))
        rank += 1
    for r in range(rank, len(augmented)):
        if augmented[r][n_cols] != 0:
            logger.debug(f"Inconsistent system: {len(rows)} equations, rank {rank}")
            return None
    solution: List[Rational] = [0] * n_cols
    for r, col in pivots:
        solution[col] = canonical_number(augmented[r][n_cols])
    return solution


def companion_matrix(coeffs: Sequence[Rational]) -> RingMatrix:
    """
    Companion matrix of a(n) = c1 a(n-1) + ... + cL a(n-L).

    Acting on the column (a(n-1), ..., a(n-L)) it produces (a(n), ..., a(n-L+1)).
    """
    size = len(coeffs)

    def entry(i: int, j: int) -> Rational:
        if i == 0:
            return coeffs[j]
        return 1 if j == i - 1 else 0

    return RingMatrix.from_function(size, size, entry)


def kronecker(first: RingMatrix, second: RingMatrix) -> RingMatrix:
    """Kronecker product of two matrices."""
    rows = []
    for r1 in first.rows:
        for r2 in second.rows:
            rows.append([a * b for a in r1 for b in r2])
    return RingMatrix(rows, first.zero, first.one, n_cols=first.n_cols * second.n_cols)


def direct_sum(first: RingMatrix, second: RingMatrix) -> RingMatrix:
    """Block-diagonal matrix diag(first, second)."""
    n1, n2 = first.n_cols, second.n_cols
    rows = [list(r) + [first.zero] * n2 for r in first.rows]
    rows += [[first.zero] * n1 + list(r) for r in second.rows]
    return RingMatrix(rows, first.zero, first.one, n_cols=n1 + n2)
