"""Exact matrices and fraction-free determinants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .domain import ZZ, Domain


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]
    domain: Domain = ZZ

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        if self.domain.p is None:
            object.__setattr__(self, "entries", tuple(map(int, self.entries)))
        else:
            p = self.domain.p
            object.__setattr__(self, "entries", tuple(int(e) % p for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], domain: Domain = ZZ) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(e for r in rows for e in r), domain)

    @classmethod
    def identity(cls, n: int, domain: Domain = ZZ) -> "ExactMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)), domain)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            ak = a[k]
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                ai[j] = (ai[j] * pivot - aik * ak[j]) // prev
            ai[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_exact(m: ExactMatrix) -> int:
    """Determinant by Bareiss elimination over Z, reduced into the matrix's domain."""
    if not m.is_square:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    return m.domain.reduce(_bareiss(m.to_rows()))


def det_cofactor(rows: Sequence[Sequence[int]]) -> int:
    """Laplace expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * det_cofactor(minor)
    return total
