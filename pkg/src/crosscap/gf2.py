"""Dense linear algebra over GF(2) with bit-packed rows.

Rows are Python integers; bit j of row i is entry (i, j). Rank is
computed by Gaussian elimination on whole rows at once, which keeps the
inner loop in C even for a few hundred chords.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Gf2Matrix:
    """An n-by-n matrix over GF(2)."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("matrix size must be nonnegative")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        mask = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row < 0 or row & ~mask:
                raise ValueError(f"row {i} has bits outside 0..{self.n - 1}")

    @classmethod
    def zeros(cls, n: int) -> "Gf2Matrix":
        return cls(n, (0,) * n)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]]) -> "Gf2Matrix":
        n = len(dense)
        rows = []
        for row in dense:
            if len(row) != n:
                raise ValueError("dense matrix must be square")
            rows.append(sum((int(x) & 1) << j for j, x in enumerate(row)))
        return cls(n, tuple(rows))

    def to_dense(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.n)] for row in self.rows]

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise ValueError(f"entry ({i}, {j}) out of range for size {self.n}")
        return (self.rows[i] >> j) & 1

    def transpose(self) -> "Gf2Matrix":
        cols = [0] * self.n
        for i, row in enumerate(self.rows):
            while row:
                low = row & -row
                cols[low.bit_length() - 1] |= 1 << i
                row ^= low
        return Gf2Matrix(self.n, tuple(cols))

    def is_symmetric(self) -> bool:
        return self.rows == self.transpose().rows

    def rank(self) -> int:
        pivot_rows: dict[int, int] = {}
        for row in self.rows:
            cur = row
            while cur:
                high = cur.bit_length() - 1
                if high in pivot_rows:
                    cur ^= pivot_rows[high]
                else:
                    pivot_rows[high] = cur
                    break
        return len(pivot_rows)

    @property
    def corank(self) -> int:
        return self.n - self.rank()

    def principal_submatrix(self, indices: Iterable[int]) -> "Gf2Matrix":
        """Restrict to the given rows/columns, kept in ascending order."""
        idx = sorted(set(indices))
        for i in idx:
            if not 0 <= i < self.n:
                raise ValueError(f"index {i} out of range for size {self.n}")
        rows = []
        for i in idx:
            row = self.rows[i]
            rows.append(sum(((row >> j) & 1) << k for k, j in enumerate(idx)))
        return Gf2Matrix(len(idx), tuple(rows))


def rank(matrix: Gf2Matrix) -> int:
    """Rank of `matrix` over GF(2)."""
    return matrix.rank()


def principal_submatrix(matrix: Gf2Matrix, indices: Iterable[int]) -> Gf2Matrix:
    """Principal submatrix of `matrix` on `indices` (ascending order)."""
    return matrix.principal_submatrix(indices)
