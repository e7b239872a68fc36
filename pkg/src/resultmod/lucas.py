"""Lucas sequences V_n(P, Q) and the mod q^2 congruences they satisfy."""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import IntPolynomial
from .primes import require_prime
from .reports import CongruenceReport
from .resultants import cyclotomic_style_resultant

DEFAULT_EXACT_CAP = 10**4
DEFAULT_BRIDGE_CAP = 101


@dataclass(frozen=True)
class LucasParams:
    P: int
    Q: int
    discriminant: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "discriminant", self.P * self.P - 4 * self.Q)

    def shifted(self, k: int) -> "LucasParams":
        """Parameters of the sequence whose roots are those of this one plus ``k``."""
        return LucasParams(self.P + 2 * k, k * k + self.P * k + self.Q)

    def characteristic(self) -> IntPolynomial:
        """``x^2 - P*x + Q``."""
        return IntPolynomial((self.Q, -self.P, 1))


LUCAS = LucasParams(1, -1)
PELL_LUCAS = LucasParams(2, -1)


def lucas_v_exact(n: int, params: LucasParams, cap: int = DEFAULT_EXACT_CAP) -> int:
    if n < 0:
        raise ValueError("index must be non-negative")
    if n > cap:
        raise ValueError(f"index {n} exceeds exact-evaluation cap {cap}")
    a, b = 2, params.P
    for _ in range(n):
        a, b = b, params.P * b - params.Q * a
    return a


def lucas_v_mod(n: int, params: LucasParams, m: int) -> int:
    """V_n mod m by fast doubling over the pair (V_k, V_{k+1}) and Q^k."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if n < 0:
        raise ValueError("index must be non-negative")
    P, Q = params.P % m, params.Q % m
    vk, vk1, qk = 2 % m, P, 1
    for bit in bin(n)[2:]:
        v2k = (vk * vk - 2 * qk) % m
        v2k1 = (vk * vk1 - P * qk) % m
        q2k = qk * qk % m
        if bit == "1":
            v2k2 = (vk1 * vk1 - 2 * qk * Q) % m
            vk, vk1, qk = v2k1, v2k2, q2k * Q % m
        else:
            vk, vk1, qk = v2k, v2k1, q2k
    return vk


def lucas_number(n: int) -> int:
    return lucas_v_exact(n, LUCAS)


def pell_lucas_number(n: int) -> int:
    return lucas_v_exact(n, PELL_LUCAS)


def legendre(a: int, q: int) -> int:
    """Legendre symbol (a/q) for an odd prime q via Euler's criterion."""
    a %= q
    if a == 0:
        return 0
    return 1 if pow(a, (q - 1) // 2, q) == 1 else -1


def _pair(
    params: LucasParams,
    q: int,
    labels: tuple[str, str],
    ok: bool,
    reason: str,
    square_rhs=None,
) -> tuple[CongruenceReport, CongruenceReport]:
    m = q * q
    h = (q - 1) // 2
    Qm = params.Q % m
    v_full = lucas_v_mod(q - 1, params, m)
    v_half = lucas_v_mod(h, params, m)
    rhs_full = pow(Qm, q - 1, m) + 1
    if square_rhs is None:
        rhs_half = (pow(Qm, h, m) + 1) ** 2
    else:
        rhs_half = square_rhs(Qm, m)
    details = {"P": params.P, "Q": params.Q, "legendre": legendre(params.discriminant, q)}
    return (
        CongruenceReport.build(
            labels[0], q, 2, v_full, rhs_full,
            preconditions_met=ok, reason=reason, details={**details, "index": q - 1},
        ),
        CongruenceReport.build(
            labels[1], q, 2, v_half * v_half, rhs_half,
            preconditions_met=ok, reason=reason, details={**details, "index": h},
        ),
    )


def _theorem4_preconditions(params: LucasParams, q: int) -> tuple[bool, str]:
    if params.Q % q == 0:
        return False, f"Q = {params.Q} is divisible by {q}"
    leg = legendre(params.discriminant, q)
    if leg != 1:
        return False, f"Legendre symbol ({params.discriminant}/{q}) = {leg}, not 1"
    return True, ""


def check_theorem4(
    params: LucasParams, q: int
) -> tuple[CongruenceReport, CongruenceReport]:
    """V_{q-1} == Q^{q-1} + 1 and V_{(q-1)/2}^2 == (Q^{(q-1)/2} + 1)^2 (mod q^2)."""
    require_prime(q, odd=True)
    ok, reason = _theorem4_preconditions(params, q)
    return _pair(params, q, ("eq12", "eq13"), ok, reason)


def check_corollary2(
    k: int, params: LucasParams, q: int
) -> tuple[CongruenceReport, CongruenceReport]:
    require_prime(q, odd=True)
    shifted = params.shifted(k)
    if shifted.discriminant != params.discriminant:
        raise AssertionError("discriminant is not shift-invariant")
    ok, reason = True, ""
    leg = legendre(params.discriminant, q)
    if leg != 1:
        ok, reason = False, f"Legendre symbol ({params.discriminant}/{q}) = {leg}, not 1"
    elif shifted.Q % q == 0:
        ok, reason = False, f"k^2 + P*k + Q = {shifted.Q} is divisible by {q}"
    a, b = _pair(shifted, q, ("eq15", "eq16"), ok, reason)
    extra = {"k": k, "base_P": params.P, "base_Q": params.Q}
    a.details.update(extra)
    b.details.update(extra)
    return a, b


def _expanded_square_rhs(q: int):
    # (c^{(q-1)/2} + 1)^2 written out as c^{q-1} + 2 c^{(q-1)/2} + 1
    h = (q - 1) // 2

    def rhs(c: int, m: int) -> int:
        return pow(c, q - 1, m) + 2 * pow(c, h, m) + 1

    return rhs


def _survey(
    q: int, base: LucasParams, labels: tuple[str, str, str, str]
) -> list[CongruenceReport]:
    m = q * q
    h = (q - 1) // 2
    reports = [
        CongruenceReport.build(
            labels[2], q, 2, lucas_v_mod(q - 1, base, m), 2, details={"k": 0}
        ),
        CongruenceReport.build(
            labels[3], q, 2, lucas_v_mod(h, base, m) ** 2, 2 + 2 * (-1) ** h,
            details={"k": 0},
        ),
    ]
    rhs = _expanded_square_rhs(q)
    for k in range(q):
        shifted = base.shifted(k)
        ok = shifted.Q % q != 0
        reason = "" if ok else f"shifted Q = {shifted.Q} is divisible by {q}"
        a, b = _pair(shifted, q, labels[:2], ok, reason, square_rhs=rhs)
        a.details["k"] = k
        b.details["k"] = k
        reports += [a, b]
    return reports


def survey_section31(q: int) -> list[CongruenceReport]:
    """Lucas-number congruences for a prime q == +-1 (mod 5)."""
    require_prime(q, odd=True)
    if q % 5 not in (1, 4):
        raise ValueError(f"{q} is not congruent to +-1 mod 5")
    return _survey(q, LUCAS, ("eq17", "eq18", "eq19", "eq20"))


def survey_section32(q: int) -> list[CongruenceReport]:
    """Pell-Lucas congruences for a prime q == +-1 (mod 8)."""
    require_prime(q, odd=True)
    if q % 8 not in (1, 7):
        raise ValueError(f"{q} is not congruent to +-1 mod 8")
    return _survey(q, PELL_LUCAS, ("eq21", "eq22", "eq23", "eq24"))


def resultant_lucas_identity(
    params: LucasParams, q: int, cap: int = DEFAULT_BRIDGE_CAP
) -> tuple[int, int, bool]:
    """``R(x^2 - P x + Q, x^{q-1} - 1)`` against ``1 + Q^{q-1} - V_{q-1}``."""
    require_prime(q, odd=True)
    if q > cap:
        raise ValueError(f"prime {q} exceeds bridge range {cap}")
    r = cyclotomic_style_resultant(params.characteristic(), q - 1, -1)
    closed = 1 + params.Q ** (q - 1) - lucas_v_exact(q - 1, params)
    return r, closed, r == closed
