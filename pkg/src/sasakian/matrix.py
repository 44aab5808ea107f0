"""Dense exact matrices over Q(i).

Row reduction is fraction-free in the Bareiss style: each row is first
scaled to Gaussian-integer entries, the forward sweep uses the two-step
condensation ``row_i <- (pivot*row_i - m[i][c]*row_piv) / previous_pivot``
whose divisions are exact, and only the final normalisation to reduced
echelon form divides by pivots.  Entry growth stays polynomial and every
intermediate value remains in Q(i).

Matrices are immutable once built; all operations return new objects.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .scalars import GaussianRational, ONE, ZERO, as_scalar

Row = List[GaussianRational]


class ExactMatrix:
    """A rows x cols matrix of Gaussian rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence]):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"shape mismatch: expected {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._data = tuple(tuple(as_scalar(x) for x in r) for r in data)

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "ExactMatrix":
        data = [list(r) for r in data]
        if not data:
            return cls(0, 0, [])
        return cls(len(data), len(data[0]), data)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, entries: Sequence) -> "ExactMatrix":
        return cls(len(entries), 1, [[x] for x in entries])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "ExactMatrix":
        if not columns:
            return cls(0, 0, [])
        n = len(columns[0])
        return cls(n, len(columns), [[col[i] for col in columns] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "ExactMatrix":
        n = len(entries)
        return cls(n, n, [[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    # -- access ----------------------------------------------------------------

    def __getitem__(self, key: Tuple[int, int]) -> GaussianRational:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> Row:
        return list(self._data[i])

    def col(self, j: int) -> Row:
        return [self._data[i][j] for i in range(self.rows)]

    def column_vectors(self) -> List[Row]:
        return [self.col(j) for j in range(self.cols)]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def entries(self) -> Iterable[GaussianRational]:
        for r in self._data:
            yield from r

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"ExactMatrix({self.rows}x{self.cols}: {body})"

    # -- algebra -----------------------------------------------------------------

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return ExactMatrix(
            self.rows,
            self.cols,
            [
                [self._data[i][j] + other._data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __neg__(self) -> "ExactMatrix":
        return self.scale(-1)

    def scale(self, c) -> "ExactMatrix":
        c = as_scalar(c)
        return ExactMatrix(
            self.rows, self.cols, [[c * x for x in r] for r in self._data]
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ot = other._data
        out = []
        for i in range(self.rows):
            ri = self._data[i]
            out_row = []
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a = ri[k]
                    if a.is_zero():
                        continue
                    b = ot[k][j]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return ExactMatrix(self.rows, other.cols, out)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return self @ other
        return self.scale(other)

    __rmul__ = scale

    def apply(self, vector: Sequence) -> Row:
        """Matrix times coordinate vector."""
        if len(vector) != self.cols:
            raise ValueError("vector length mismatch")
        vec = [as_scalar(x) for x in vector]
        out = []
        for i in range(self.rows):
            acc = ZERO
            ri = self._data[i]
            for k in range(self.cols):
                if not ri[k].is_zero() and not vec[k].is_zero():
                    acc = acc + ri[k] * vec[k]
            out.append(acc)
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols,
            self.rows,
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def conjugate(self) -> "ExactMatrix":
        return ExactMatrix(
            self.rows, self.cols, [[x.conjugate() for x in r] for r in self._data]
        )

    def conjugate_transpose(self) -> "ExactMatrix":
        return self.conjugate().transpose()

    def map(self, f: Callable[[GaussianRational], GaussianRational]) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [[f(x) for x in r] for r in self._data])

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return ExactMatrix(
            self.rows,
            self.cols + other.cols,
            [list(self._data[i]) + list(other._data[i]) for i in range(self.rows)],
        )

    def vstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return ExactMatrix(
            self.rows + other.rows,
            self.cols,
            [list(r) for r in self._data] + [list(r) for r in other._data],
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(
            len(row_idx),
            len(col_idx),
            [[self._data[i][j] for j in col_idx] for i in row_idx],
        )

    def kronecker(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product; block (i,j) is self[i,j] * other."""
        out = []
        for i in range(self.rows):
            for k in range(other.rows):
                row = []
                for j in range(self.cols):
                    a = self._data[i][j]
                    row.extend([a * other._data[k][l] for l in range(other.cols)])
                out.append(row)
        return ExactMatrix(self.rows * other.rows, self.cols * other.cols, out)

    # -- elimination ---------------------------------------------------------

    def _integer_rows(self) -> List[Row]:
        """Copy with every row scaled to denominator-free entries.

        Row scaling preserves the kernel, the rank and the column
        dependency pattern, which is all the reduction consumers need.
        """
        out = []
        for r in self._data:
            denoms = [x.re.denominator for x in r] + [x.im.denominator for x in r]
            m = lcm(*denoms) if denoms else 1
            f = Fraction(m)
            out.append([GaussianRational(x.re * f, x.im * f) for x in r])
        return out

    def rref(self) -> Tuple["ExactMatrix", List[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        work = self._integer_rows()
        nrows, ncols = self.rows, self.cols
        pivots: List[int] = []
        prev = ONE
        r = 0
        # Bareiss forward sweep: fraction-free condensation below each pivot.
        for c in range(ncols):
            piv_row = None
            for i in range(r, nrows):
                if not work[i][c].is_zero():
                    piv_row = i
                    break
            if piv_row is None:
                continue
            work[r], work[piv_row] = work[piv_row], work[r]
            piv = work[r][c]
            for i in range(r + 1, nrows):
                fi = work[i][c]
                work[i] = [
                    (piv * work[i][j] - fi * work[r][j]) / prev for j in range(ncols)
                ]
            prev = piv
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        # Normalise pivot rows, then clear entries above each pivot.
        for k, c in enumerate(pivots):
            piv = work[k][c]
            work[k] = [x / piv for x in work[k]]
        for k in reversed(range(len(pivots))):
            c = pivots[k]
            for i in range(k):
                f = work[i][c]
                if f.is_zero():
                    continue
                work[i] = [work[i][j] - f * work[k][j] for j in range(ncols)]
        return ExactMatrix(nrows, ncols, work), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> List[Row]:
        """Basis of the right kernel (list of coordinate vectors)."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for j in free:
            vec = [ZERO] * self.cols
            vec[j] = ONE
            for k, c in enumerate(pivots):
                vec[c] = -red[k, j]
            basis.append(vec)
        return basis

    def column_space_basis(self) -> List[Row]:
        """Basis of the column span: the original columns at pivot positions."""
        _, pivots = self.rref()
        return [self.col(j) for j in pivots]

    def solve(self, rhs: "ExactMatrix") -> Optional["ExactMatrix"]:
        """One solution X of self @ X = rhs, or None when inconsistent."""
        if rhs.rows != self.rows:
            raise ValueError("right-hand side has wrong height")
        red, pivots = self.hstack(rhs).rref()
        for k in range(len(pivots)):
            if pivots[k] >= self.cols:
                return None
        sol = [[ZERO] * rhs.cols for _ in range(self.cols)]
        for k, c in enumerate(pivots):
            for j in range(rhs.cols):
                sol[c][j] = red[k, self.cols + j]
        return ExactMatrix(self.cols, rhs.cols, sol)

    def inverse(self) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices invert")
        sol = self.solve(ExactMatrix.identity(self.rows))
        if sol is None or (self @ sol) != ExactMatrix.identity(self.rows):
            raise ValueError("matrix is singular")
        return sol

    def determinant(self) -> GaussianRational:
        """Determinant by fraction-free Bareiss condensation."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return ONE
        work = [list(r) for r in self._data]
        sign = ONE
        prev = ONE
        for k in range(n - 1):
            if work[k][k].is_zero():
                swap = next((i for i in range(k + 1, n) if not work[i][k].is_zero()), None)
                if swap is None:
                    return ZERO
                work[k], work[swap] = work[swap], work[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    work[i][j] = (work[k][k] * work[i][j] - work[i][k] * work[k][j]) / prev
                work[i][k] = ZERO
            prev = work[k][k]
        return sign * work[n - 1][n - 1]


def scalar_matrix(n: int, c) -> ExactMatrix:
    return ExactMatrix.identity(n).scale(c)
