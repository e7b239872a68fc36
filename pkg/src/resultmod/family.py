"""Exhaustive bound checks over every pair of small monic polynomials mod q.

For a fixed monic ``f`` of degree ``n`` the remainder matrix ``A(g)`` is
linear in the coefficients of ``g``, so it is assembled for a whole batch of
``g`` at once from the matrices of ``x**t mod f``.  Since ``f`` is monic,
``R(f, g) = det A(g)``.  Determinants are exact: int64 is used only when an
a-priori bound rules out overflow, otherwise Python integers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .poly import IntPolynomial
from .primes import require_prime
from .resultants import remainder_rows

_INT64_SAFE = 2**62
BOUNDS = ("theorem1", "corollary1", "ell_vs_rank")


def monic_family(q: int, max_degree: int) -> list[IntPolynomial]:
    """All monic polynomials of degree <= max_degree with lower coefficients in [0, q)."""
    out = [IntPolynomial((1,))]
    for d in range(1, max_degree + 1):
        for low in itertools.product(range(q), repeat=d):
            out.append(IntPolynomial(low + (1,)))
    return out


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = list(perm)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def batch_det(A: np.ndarray) -> np.ndarray:
    """Exact determinants of a stack ``(B, n, n)`` of integer matrices (Leibniz)."""
    B, n, _ = A.shape
    if n == 0:
        return np.ones(B, dtype=object)
    bound = int(np.abs(A).max(initial=0)) if A.size else 0
    if math.factorial(n) * bound**n < _INT64_SAFE:
        work = A.astype(np.int64)
    else:
        work = A.astype(object)
    total = np.zeros(B, dtype=work.dtype)
    rows = np.arange(n)
    for perm in itertools.permutations(range(n)):
        term = work[:, rows[0], perm[0]]
        for i in range(1, n):
            term = term * work[:, i, perm[i]]
        total = total + term if _perm_sign(perm) > 0 else total - term
    return total.astype(object)


def batch_rank_mod(A: np.ndarray, q: int) -> np.ndarray:
    """Ranks over GF(q) of a stack ``(B, r, c)`` of integer matrices."""
    M = np.mod(A.astype(object), q).astype(np.int64)
    B, r, c = M.shape
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = pow(a, -1, q)
    rank = np.zeros(B, dtype=np.int64)
    row_ids = np.arange(r)
    for col in range(c):
        cand = (M[:, :, col] != 0) & (row_ids[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        idx = np.nonzero(has)[0]
        piv = cand[idx].argmax(axis=1)
        tgt = rank[idx]
        pr = M[idx, piv].copy()
        M[idx, piv] = M[idx, tgt]
        pr = pr * inv[pr[:, col]][:, None] % q
        M[idx, tgt] = pr
        below = row_ids[None, :] > tgt[:, None]
        factor = np.where(below, M[idx, :, col], 0)
        M[idx] = (M[idx] - factor[:, :, None] * pr[:, None, :]) % q
        rank[idx] += 1
    return rank


def batch_valuation(values: np.ndarray, q: int) -> np.ndarray:
    """q-adic valuations as floats; ``inf`` for zero."""
    vals = [abs(int(v)) for v in values]
    out = np.empty(len(vals))
    for i, v in enumerate(vals):
        if v == 0:
            out[i] = math.inf
            continue
        e = 0
        while v % q == 0:
            v //= q
            e += 1
        out[i] = e
    return out


def root_table(polys: list[IntPolynomial], q: int) -> np.ndarray:
    """Boolean ``(len(polys), q)`` table: entry ``[i, x]`` is ``polys[i](x) == 0 mod q``."""
    width = max(len(p.coeffs) for p in polys)
    C = np.zeros((len(polys), width), dtype=np.int64)
    for i, p in enumerate(polys):
        C[i, : len(p.coeffs)] = [c % q for c in p.coeffs]
    xs = np.arange(q, dtype=np.int64)
    acc = np.zeros((len(polys), q), dtype=np.int64)
    for k in range(width - 1, -1, -1):
        acc = (acc * xs[None, :] + C[:, k : k + 1]) % q
    return acc == 0


def coefficient_table(polys: list[IntPolynomial], width: int) -> np.ndarray:
    C = np.zeros((len(polys), width), dtype=np.int64)
    for i, p in enumerate(polys):
        C[i, : len(p.coeffs)] = p.coeffs
    return C


def remainder_basis(f: IntPolynomial, count: int) -> np.ndarray:
    """Stack of remainder matrices of ``(f, x**t)`` for ``t < count``; f monic."""
    n = f.degree
    out = np.zeros((count, n, n), dtype=np.int64)
    for t in range(count):
        rows = remainder_rows(f, IntPolynomial.monomial(t))
        out[t] = np.array(rows, dtype=np.int64).reshape(n, n)
    return out


@dataclass(frozen=True)
class PairBatch:
    """Per-``g`` results for one fixed ``f``."""

    f: IntPolynomial
    ell: np.ndarray
    rank: np.ndarray
    resultant: np.ndarray
    valuation: np.ndarray


def analyze_batch(
    f: IntPolynomial,
    gs: list[IntPolynomial],
    q: int,
    *,
    f_roots: np.ndarray | None = None,
    g_roots: np.ndarray | None = None,
    g_coeffs: np.ndarray | None = None,
) -> PairBatch:
    if not f.is_monic():
        raise ValueError("batched analysis requires a monic f")
    n = f.degree
    if f_roots is None:
        f_roots = root_table([f], q)[0]
    if g_roots is None:
        g_roots = root_table(gs, q)
    if g_coeffs is None:
        g_coeffs = coefficient_table(gs, max(len(g.coeffs) for g in gs))
    ell = g_roots[:, f_roots].sum(axis=1)
    if n == 0:
        ones = np.ones(len(gs), dtype=object)
        zeros = np.zeros(len(gs), dtype=np.int64)
        return PairBatch(f, ell, zeros, ones, np.zeros(len(gs)))
    basis = remainder_basis(f, g_coeffs.shape[1])
    bound = int(np.abs(g_coeffs).max()) * int(np.abs(basis).max()) * g_coeffs.shape[1]
    if bound < _INT64_SAFE:
        A = np.tensordot(g_coeffs, basis, axes=(1, 0))
    else:
        A = np.tensordot(g_coeffs.astype(object), basis.astype(object), axes=(1, 0))
    R = batch_det(A)
    return PairBatch(f, ell, batch_rank_mod(A, q), R, batch_valuation(R, q))


@dataclass
class FamilySweep:
    q: int
    max_degree: int
    pairs: int = 0
    max_ell: int = 0
    # violation counts keyed by bound name, with a few example pairs each
    violations: dict[str, int] = field(default_factory=dict)
    examples: dict[str, list] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())


def sweep_theorem1(q: int, max_degree: int = 3, *, keep: int = 10) -> FamilySweep:
    """Check ``v_q(R) >= n - p >= ell`` for every ordered pair of the monic family."""
    require_prime(q)
    polys = monic_family(q, max_degree)
    roots = root_table(polys, q)
    coeffs = coefficient_table(polys, max_degree + 1)
    summary = FamilySweep(q, max_degree)
    for name in BOUNDS:
        summary.violations[name] = 0
        summary.examples[name] = []
    for i, f in enumerate(polys):
        batch = analyze_batch(f, polys, q, f_roots=roots[i], g_roots=roots, g_coeffs=coeffs)
        n = f.degree
        drop = n - batch.rank
        summary.pairs += len(polys)
        summary.max_ell = max(summary.max_ell, int(batch.ell.max()))
        checks = {
            "theorem1": batch.valuation < batch.ell,
            "corollary1": batch.valuation < drop,
            "ell_vs_rank": drop < batch.ell,
        }
        for name, bad in checks.items():
            hits = np.nonzero(bad)[0]
            summary.violations[name] += len(hits)
            room = keep - len(summary.examples[name])
            summary.examples[name] += [(f, polys[j]) for j in hits[:room]]
    return summary
