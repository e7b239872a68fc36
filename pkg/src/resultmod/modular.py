"""Common roots modulo a prime and the divisibility bounds they force.

If ``f`` and ``g`` have ``ell`` common roots modulo ``q`` then ``q**ell``
divides ``R(f, g)``.  Sharper: with ``p`` the rank modulo ``q`` of the
remainder matrix of ``(f, g)``, ``ell <= n - p <= v_q(R(f, g))``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import IntMatrix, rank_mod, reduce_mod, triangularize_det_preserving, valuation
from .lucas import legendre
from .poly import IntPolynomial, poly_eval_mod
from .primes import require_prime
from .reports import CongruenceReport
from .resultants import (
    cyclotomic_style_resultant,
    lift_rows,
    remainder_rows,
    resultant_sylvester,
)

DEFAULT_SCAN_CAP = 10**6


class IdenticallyZeroModQ(ValueError):
    """A polynomial vanishes identically mod q; the bounds are not applicable."""


class PreconditionError(ValueError):
    pass


class TheoremViolation(AssertionError):
    """A proven bound failed to hold; signals an implementation bug."""


def is_identically_zero_mod(f: IntPolynomial, q: int) -> bool:
    require_prime(q)
    return all(c % q == 0 for c in f.coeffs)


def roots_mod(f: IntPolynomial, q: int, scan_cap: int = DEFAULT_SCAN_CAP) -> list[int]:
    """All residues ``x0`` in ``[0, q)`` with ``f(x0) == 0 (mod q)``, by scanning."""
    require_prime(q)
    if q > scan_cap:
        raise ValueError(f"prime {q} exceeds root-scan cap {scan_cap}")
    if is_identically_zero_mod(f, q):
        raise IdenticallyZeroModQ(f"{f} is identically zero mod {q}")
    return [x0 for x0 in range(q) if poly_eval_mod(f, x0, q) == 0]


def common_roots(
    f: IntPolynomial, g: IntPolynomial, q: int, scan_cap: int = DEFAULT_SCAN_CAP
) -> list[int]:
    rg = set(roots_mod(g, q, scan_cap))
    return [r for r in roots_mod(f, q, scan_cap) if r in rg]


def remainder_matrix(f: IntPolynomial, g: IntPolynomial) -> IntMatrix:
    """Integer matrix of the system ``r_k(x) == 0``, rows ``k = n-1 .. 0``.

    Requires the remainders to be integral (e.g. ``f`` monic); use
    :func:`lifted_remainder_matrix` otherwise.
    """
    L, den = lifted_remainder_matrix(f, g)
    if den != 1:
        raise ValueError(
            f"remainders modulo {f} are not integral (common denominator {den})"
        )
    return L


def lifted_remainder_matrix(f: IntPolynomial, g: IntPolynomial) -> tuple[IntMatrix, int]:
    """``(L, D)`` with ``L = D * A`` integral, ``A`` the rational remainder matrix."""
    if f.is_zero() or g.is_zero():
        raise ValueError("remainder matrix of the zero polynomial")
    return lift_rows(remainder_rows(f, g))


@dataclass(frozen=True)
class ModAnalysis:
    q: int
    f: IntPolynomial
    g: IntPolynomial
    roots_f: tuple[int, ...]
    roots_g: tuple[int, ...]
    common_roots: tuple[int, ...]
    ell: int
    # None when q divides the leading coefficient of a non-monic f, where
    # the remainder matrix has no reduction mod q
    rank_p: int | None
    resultant: int
    v_q: int | float
    bound_theorem1: bool
    bound_corollary1: bool | None
    ell_vs_rank: bool | None
    remainder_denominator: int = 1
    triangular_zero_rows: int | None = None

    @property
    def n(self) -> int:
        return self.f.degree

    @property
    def m(self) -> int:
        return self.g.degree

    def violations(self) -> list[str]:
        bad = []
        if not self.bound_theorem1:
            bad.append(f"v_q = {self.v_q} < ell = {self.ell}")
        if self.bound_corollary1 is False:
            bad.append(f"v_q = {self.v_q} < n - p = {self.n - self.rank_p}")
        if self.ell_vs_rank is False:
            bad.append(f"n - p = {self.n - self.rank_p} < ell = {self.ell}")
        if self.triangular_zero_rows is not None and self.triangular_zero_rows < self.ell:
            bad.append(f"only {self.triangular_zero_rows} zero rows mod q, ell = {self.ell}")
        return bad


def _trailing_zero_rows_mod(A: IntMatrix, q: int) -> int:
    count = 0
    for i in range(A.rows - 1, -1, -1):
        if any(v % q for v in A.row(i)):
            break
        count += 1
    return count


def analyze(
    f: IntPolynomial,
    g: IntPolynomial,
    q: int,
    *,
    strict: bool = False,
    scan_cap: int = DEFAULT_SCAN_CAP,
) -> ModAnalysis:
    require_prime(q)
    for name, poly in (("f", f), ("g", g)):
        if is_identically_zero_mod(poly, q):
            raise IdenticallyZeroModQ(
                f"{name} = {poly} is identically zero in Z_{q}; this trivial case "
                f"gives R(f, g) == 0 mod q^n or q^m and is excluded"
            )
    rf = roots_mod(f, q, scan_cap)
    rg = roots_mod(g, q, scan_cap)
    rg_set = set(rg)
    common = tuple(r for r in rf if r in rg_set)
    ell = len(common)

    res = resultant_sylvester(f, g)
    v = valuation(res, q)
    n = f.degree

    L, den = lifted_remainder_matrix(f, g)
    rank_p = None
    zero_rows = None
    if den % q:
        rank_p = rank_mod(reduce_mod(L, q))
        if n > 0:
            A1, _ = triangularize_det_preserving(L, q)
            zero_rows = _trailing_zero_rows_mod(A1, q)
        else:
            zero_rows = 0

    result = ModAnalysis(
        q=q,
        f=f,
        g=g,
        roots_f=tuple(rf),
        roots_g=tuple(rg),
        common_roots=common,
        ell=ell,
        rank_p=rank_p,
        resultant=res,
        v_q=v,
        bound_theorem1=v >= ell,
        bound_corollary1=None if rank_p is None else v >= n - rank_p,
        ell_vs_rank=None if rank_p is None else n - rank_p >= ell,
        remainder_denominator=den,
        triangular_zero_rows=zero_rows,
    )
    if strict and result.violations():
        raise TheoremViolation("; ".join(result.violations()))
    return result


@dataclass(frozen=True)
class QrSplit:
    q: int
    roots: tuple[int, ...]
    residue_roots: tuple[int, ...]

    @property
    def b(self) -> int:
        return len(self.residue_roots)


def qr_split(roots, q: int) -> QrSplit:
    """Separate nonzero quadratic residues (Euler's criterion) from the rest."""
    roots = tuple(roots)
    return QrSplit(q, roots, tuple(r for r in roots if legendre(r, q) == 1))


def _cyclotomic_preconditions(f: IntPolynomial, q: int) -> None:
    require_prime(q, odd=True)
    if f.is_zero():
        raise PreconditionError("f must be nonzero")
    if f.coeff(0) % q == 0:
        raise PreconditionError(f"constant term {f.coeff(0)} is divisible by {q}")


def _bound_report(label, q, ell, R, strict, details) -> CongruenceReport:
    v = valuation(R, q)
    report = CongruenceReport.build(
        label, q, ell, R, 0, details={"resultant": R, "valuation": v, **details}
    )
    if strict and not report.holds:
        raise TheoremViolation(f"{label}: v_{q}({R}) = {v} < {ell}")
    return report


def check_theorem2(f: IntPolynomial, q: int, *, strict: bool = False) -> CongruenceReport:
    """``q**ell`` divides ``R(f, x**(q-1) - 1)`` where ``ell`` counts roots of f."""
    _cyclotomic_preconditions(f, q)
    roots = roots_mod(f, q)
    R = cyclotomic_style_resultant(f, q - 1, -1)
    return _bound_report("eq7", q, len(roots), R, strict, {"roots": roots})


def check_theorem3(
    f: IntPolynomial, q: int, *, strict: bool = False
) -> tuple[CongruenceReport, CongruenceReport]:
    """Split the root-count bound across ``x**((q-1)/2) -+ 1``.

    Roots that are quadratic residues divide ``R(f, x**h - 1)``, the
    non-residues divide ``R(f, x**h + 1)``, ``h = (q-1)/2``.
    """
    _cyclotomic_preconditions(f, q)
    split = qr_split(roots_mod(f, q), q)
    h = (q - 1) // 2
    r_minus = cyclotomic_style_resultant(f, h, -1)
    r_plus = cyclotomic_style_resultant(f, h, 1)
    common = {"roots": list(split.roots), "residue_roots": list(split.residue_roots)}
    return (
        _bound_report("eq9", q, split.b, r_minus, strict, common),
        _bound_report("eq10", q, len(split.roots) - split.b, r_plus, strict, common),
    )
