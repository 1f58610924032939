"""Dense exact-integer matrices: products and Bareiss determinants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = ["IntMatrix", "mat_mul", "determinant", "ShapeError"]


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    """Row-major matrix of Python ints (arbitrary precision)."""
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        data = [list(r) for r in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ShapeError("ragged rows")
        return cls(len(data), cols, tuple(x for r in data for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> IntMatrix:
        return cls(size, size, tuple(int(i == j) for i in range(size) for j in range(size)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return mat_mul(self, other)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return IntMatrix(self.rows, self.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + other.scaled(-1)

    def scaled(self, c: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def nonzero_count(self) -> int:
        return sum(1 for a in self.entries if a)

    def to_strings(self) -> list[list[str]]:
        return [[str(a) for a in self.row(i)] for i in range(self.rows)]


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """
    Exact product. Zeros on either side are skipped, which matters for the
    very sparse level-to-level matrices this is mostly fed.
    """
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    b_sparse = [[(j, x) for j, x in enumerate(b.row(k)) if x] for k in range(b.rows)]
    out: list[int] = []
    for i in range(a.rows):
        acc = [0] * b.cols
        for k, x in enumerate(a.row(i)):
            if x:
                for j, y in b_sparse[k]:
                    acc[j] += x * y
        out.extend(acc)
    return IntMatrix(a.rows, b.cols, tuple(out))


def determinant(a: IntMatrix) -> int:
    """
    Fraction-free (Bareiss) determinant.

    Pivots on the first nonzero entry at or below the diagonal; each
    division by the previous pivot is exact.
    """
    if not a.is_square():
        raise ShapeError(f"determinant of non-square {a.shape} matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]
