"""Dense univariate polynomials over the integers and the rationals.

Coefficients are stored in ascending order: ``coeffs[i]`` is the
coefficient of ``x**i``.  The zero polynomial is the empty tuple and has
no integer degree; :attr:`IntPolynomial.degree` returns ``None`` for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _strip(coeffs: Iterable) -> tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        stripped = _strip(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", stripped)

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> "IntPolynomial":
        return cls(tuple(reversed(coeffs)))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * k + (c,))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def descending(self) -> list[int]:
        return list(reversed(self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, other)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, -other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_mul(self, other)

    def __pow__(self, e: int) -> "IntPolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def to_rational(self) -> "RatPolynomial":
        return RatPolynomial(tuple(Fraction(c) for c in self.coeffs))

    def __str__(self) -> str:
        return format_poly(self)


@dataclass(frozen=True)
class RatPolynomial:
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        stripped = _strip(Fraction(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", stripped)

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_integer(self) -> IntPolynomial:
        if not self.is_integral():
            raise ValueError("polynomial has non-integral coefficients")
        return IntPolynomial(tuple(c.numerator for c in self.coeffs))

    def __add__(self, other: "RatPolynomial") -> "RatPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPolynomial(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __neg__(self) -> "RatPolynomial":
        return RatPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RatPolynomial") -> "RatPolynomial":
        return self + (-other)

    def __mul__(self, other: "RatPolynomial") -> "RatPolynomial":
        return RatPolynomial(_convolve(self.coeffs, other.coeffs, Fraction(0)))

    def scale(self, c) -> "RatPolynomial":
        return RatPolynomial(tuple(c * a for a in self.coeffs))


def _convolve(a: Sequence, b: Sequence, zero):
    if not a or not b:
        return ()
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return tuple(out)


def poly_add(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    n = max(len(f.coeffs), len(g.coeffs))
    return IntPolynomial(tuple(f.coeff(i) + g.coeff(i) for i in range(n)))


def poly_mul(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(_convolve(f.coeffs, g.coeffs, 0))


def substitute_power(f: IntPolynomial, p: int) -> IntPolynomial:
    """Return ``f(x**p)``."""
    if p < 1:
        raise ValueError(f"power must be >= 1, got {p}")
    if f.is_zero():
        return f
    out = [0] * ((len(f.coeffs) - 1) * p + 1)
    for i, c in enumerate(f.coeffs):
        out[i * p] = c
    return IntPolynomial(tuple(out))


def rat_divrem(num: RatPolynomial, den: RatPolynomial) -> tuple[RatPolynomial, RatPolynomial]:
    """Exact division with remainder in Q[x].

    Returns ``(quotient, remainder)`` with ``num == quotient*den + remainder``
    and ``deg(remainder) < deg(den)``.
    """
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num.coeffs)
    n = len(den.coeffs) - 1
    lead = den.coeffs[-1]
    if len(rem) <= n:
        return RatPolynomial(), RatPolynomial(tuple(rem))
    quot = [Fraction(0)] * (len(rem) - n)
    for k in range(len(rem) - 1, n - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        t = c / lead
        quot[k - n] = t
        for j, d in enumerate(den.coeffs):
            rem[k - n + j] -= t * d
    return RatPolynomial(tuple(quot)), RatPolynomial(tuple(rem[:n]))


def rat_rem(num: RatPolynomial, den: RatPolynomial) -> RatPolynomial:
    return rat_divrem(num, den)[1]


def poly_eval_mod(f: IntPolynomial, x0: int, m: int) -> int:
    """Evaluate ``f(x0) mod m`` by Horner's rule, reducing at every step."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    x0 %= m
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * x0 + c) % m
    return acc


def format_poly(f: IntPolynomial, var: str = "x") -> str:
    """Canonical text form: descending degree, explicit ``*``, e.g. ``x^6 + 1``."""
    if f.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)
