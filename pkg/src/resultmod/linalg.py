"""Exact integer matrices and linear algebra over Z/qZ."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .primes import require_prime

INF = math.inf
DEFAULT_MINOR_CAP = 10**5


class EnumerationCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(int(v) for r in rows for v in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "IntMatrix":
        return IntMatrix(
            len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols)
        )


@dataclass(frozen=True)
class ModMatrix:
    modulus: int
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        require_prime(self.modulus)
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")
        if any(not 0 <= v < self.modulus for v in self.entries):
            raise ValueError("entries must lie in [0, modulus)")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], modulus: int) -> "ModMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(modulus, len(rows), ncols, tuple(v % modulus for r in rows for v in r))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    def is_upper_triangular(self) -> bool:
        return all(
            self[i, j] == 0 for i in range(self.rows) for j in range(min(i, self.cols))
        )


def valuation(n: int, q: int) -> int | float:
    """Exponent of the largest power of ``q`` dividing ``n``; ``INF`` for 0."""
    if n == 0:
        return INF
    n = abs(n)
    e = 0
    while n % q == 0:
        n //= q
        e += 1
    return e


def det_exact(A: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    if not A.is_square():
        raise ValueError(f"determinant of non-square {A.rows}x{A.cols} matrix")
    n = A.rows
    if n == 0:
        return 1
    M = A.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            a = ri[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                ri[j] = (pivot * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def reduce_mod(A: IntMatrix, q: int) -> ModMatrix:
    require_prime(q)
    return ModMatrix(q, A.rows, A.cols, tuple(v % q for v in A.entries))


def _rref_rows(M: list[list[int]], q: int) -> tuple[list[list[int]], int]:
    rows = len(M)
    cols = len(M[0]) if M else 0
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, q)
        M[r] = [v * inv % q for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                t = M[i][c]
                M[i] = [(a - t * b) % q for a, b in zip(M[i], M[r])]
        r += 1
    return M, r


def rref_mod(A: ModMatrix) -> ModMatrix:
    """Reduced row echelon form over GF(q)."""
    M, _ = _rref_rows(A.to_rows(), A.modulus)
    return ModMatrix(A.modulus, A.rows, A.cols, tuple(v for r in M for v in r))


def rank_mod(A: ModMatrix) -> int:
    return _rref_rows(A.to_rows(), A.modulus)[1]


def triangularize_det_preserving(A: IntMatrix, q: int) -> tuple[IntMatrix, int]:
    """Integer row reduction whose image mod ``q`` is upper triangular.

    Only row swaps and additions of integer multiples of one row to another
    are used, so ``det(A) == sign * det(A1)``.
    """
    if not A.is_square():
        raise ValueError("triangularization requires a square matrix")
    require_prime(q)
    n = A.rows
    M = A.to_rows()
    sign = 1
    r = 0
    for c in range(n):
        if r == n:
            break
        piv = next((i for i in range(r, n) if M[i][c] % q), None)
        if piv is None:
            continue
        if piv != r:
            M[r], M[piv] = M[piv], M[r]
            sign = -sign
        inv = pow(M[r][c] % q, -1, q)
        for i in range(r + 1, n):
            a = M[i][c] % q
            if a:
                t = (-a * inv) % q
                M[i] = [x + t * y for x, y in zip(M[i], M[r])]
        r += 1
    return IntMatrix.from_rows(M), sign


def count_minors(rows: int, cols: int, k: int) -> int:
    return math.comb(rows, k) * math.comb(cols, k)


def minor_valuations(
    A: IntMatrix, q: int, k: int, cap: int = DEFAULT_MINOR_CAP
) -> int | float:
    """Minimum q-adic valuation over all k x k minors of ``A``."""
    require_prime(q)
    if not 1 <= k <= min(A.rows, A.cols):
        raise ValueError(f"minor size {k} out of range for {A.rows}x{A.cols} matrix")
    total = count_minors(A.rows, A.cols, k)
    if total > cap:
        raise EnumerationCapExceeded(f"{total} minors of size {k} exceed cap {cap}")
    best: int | float = INF
    for rs in combinations(range(A.rows), k):
        for cs in combinations(range(A.cols), k):
            v = valuation(det_exact(A.submatrix(rs, cs)), q)
            if v < best:
                best = v
                if best == 0:
                    return 0
    return best
