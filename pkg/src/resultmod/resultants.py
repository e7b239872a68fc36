"""Three independent exact resultant engines.

* ``sylvester``: determinant of the Sylvester matrix.
* ``remainder_matrix``: ``a_n**m * det(A)`` where row ``k`` of ``A`` holds the
  remainder of ``x**k * g`` modulo ``f``.
* ``euclidean``: the reduction ``R(f, g) = a_n**(m-d) * R(f, g mod f)``
  combined with the swap rule ``R(f, g) = (-1)**(n*m) * R(g, f)``.

The sign convention is fixed by ``R(x - a, x - b) == a - b``, i.e.
``R(f, g) = a_n**m * prod(g(alpha))`` over the roots ``alpha`` of ``f``.
A resultant involving the zero polynomial is 0.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .linalg import IntMatrix, det_exact
from .poly import IntPolynomial, RatPolynomial, rat_rem


class Engine(str, enum.Enum):
    SYLVESTER = "sylvester"
    REMAINDER_MATRIX = "remainder_matrix"
    EUCLIDEAN = "euclidean"


class NonIntegralResultant(AssertionError):
    """An engine produced a non-integer value; always an implementation bug."""


@dataclass(frozen=True)
class ResultantResult:
    value: int
    engine: Engine
    f: IntPolynomial
    g: IntPolynomial
    degenerate: bool = False


def sylvester_matrix(f: IntPolynomial, g: IntPolynomial) -> IntMatrix:
    """``m`` shifted rows of ``f`` above ``n`` shifted rows of ``g``, descending."""
    n, m = f.degree, g.degree
    if n is None or m is None:
        raise ValueError("Sylvester matrix of the zero polynomial")
    size = n + m
    fd, gd = f.descending(), g.descending()
    rows = []
    for i in range(m):
        rows.append([0] * i + fd + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gd + [0] * (size - m - 1 - i))
    return IntMatrix.from_rows(rows) if rows else IntMatrix(0, 0, ())


def resultant_sylvester(f: IntPolynomial, g: IntPolynomial) -> int:
    if f.is_zero() or g.is_zero():
        return 0
    return det_exact(sylvester_matrix(f, g))


# -- remainders of x^k g modulo f -------------------------------------------

def _divider(lead) -> Callable:
    # integer arithmetic survives when the leading coefficient is a unit
    if lead in (1, -1):
        return lambda a: a * lead
    return lambda a: Fraction(a) / lead


def _reduce(coeffs: list, f: IntPolynomial, div: Callable) -> list:
    """Reduce an ascending coefficient list modulo ``f`` in place-style."""
    n = len(f.coeffs) - 1
    out = list(coeffs)
    fc = f.coeffs
    for k in range(len(out) - 1, n - 1, -1):
        c = out[k]
        if c == 0:
            continue
        t = div(c)
        base = k - n
        for j in range(n + 1):
            out[base + j] -= t * fc[j]
    out = out[:n]
    out.extend([0] * (n - len(out)))
    return out


def remainder_rows(f: IntPolynomial, g: IntPolynomial) -> list[list]:
    """Rows ``r_{n-1}, ..., r_0``, each in descending degree order.

    Entries are ``int`` when ``f`` has leading coefficient +-1, otherwise
    ``Fraction``.
    """
    n = f.degree
    if n is None or g.is_zero():
        raise ValueError("remainder matrix of the zero polynomial")
    div = _divider(f.leading)
    r = _reduce(list(g.coeffs), f, div)
    asc = [r]
    for _ in range(1, n):
        r = _reduce([0] + r, f, div)
        asc.append(r)
    return [list(reversed(row)) for row in reversed(asc)]


def lift_rows(rows: list[list]) -> tuple[IntMatrix, int]:
    """Clear denominators: returns ``(L, D)`` with ``L == D * rows`` entrywise."""
    den = 1
    for row in rows:
        for v in row:
            if isinstance(v, Fraction):
                den = math.lcm(den, v.denominator)
    lifted = [[int(v * den) for v in row] for row in rows]
    return IntMatrix.from_rows(lifted) if lifted else IntMatrix(0, 0, ()), den


def resultant_remainder_matrix(f: IntPolynomial, g: IntPolynomial) -> int:
    if f.is_zero() or g.is_zero():
        return 0
    n, m = f.degree, g.degree
    if n == 0:
        return f.leading**m
    L, den = lift_rows(remainder_rows(f, g))
    value = Fraction(f.leading**m * det_exact(L), den**n)
    if value.denominator != 1:
        raise NonIntegralResultant(f"remainder-matrix engine produced {value}")
    return value.numerator


# -- Euclidean reduction ----------------------------------------------------

def _resultant_rational(f: RatPolynomial, g: RatPolynomial) -> Fraction:
    scale = Fraction(1)
    while True:
        if f.is_zero() or g.is_zero():
            return Fraction(0)
        n, m = f.degree, g.degree
        if n == 0:
            return scale * f.leading**m
        if m == 0:
            return scale * g.leading**n
        if m >= n:
            h = rat_rem(g, f)
            if h.is_zero():
                return Fraction(0)
            d = h.degree
            scale *= f.leading ** (m - d)
            g, m = h, d
        if (n * m) % 2:
            scale = -scale
        f, g = g, f


def resultant_euclidean(f: IntPolynomial, g: IntPolynomial) -> int:
    if f.is_zero() or g.is_zero():
        return 0
    value = _resultant_rational(f.to_rational(), g.to_rational())
    if value.denominator != 1:
        raise NonIntegralResultant(f"Euclidean engine produced {value}")
    return value.numerator


# -- R(f, x^e + sign) --------------------------------------------------------

def power_of_x_mod(f: IntPolynomial, e: int) -> list:
    """Ascending coefficients of ``x**e mod f`` by square-and-multiply."""
    n = f.degree
    if n is None or n == 0:
        raise ValueError("modulus polynomial must have degree >= 1")
    div = _divider(f.leading)

    def mulmod(a: list, b: list) -> list:
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        return _reduce(prod, f, div)

    result = _reduce([1], f, div)
    base = _reduce([0, 1], f, div)
    while e:
        if e & 1:
            result = mulmod(result, base)
        e >>= 1
        if e:
            base = mulmod(base, base)
    return result


def cyclotomic_style_resultant(f: IntPolynomial, e: int, sign: int) -> int:
    """``R(f, x**e + sign)`` for ``sign`` in {-1, +1}, without building a
    degree-``e`` Sylvester matrix."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if e < 1:
        raise ValueError("exponent must be >= 1")
    if f.is_zero():
        return 0
    n = f.degree
    if n == 0:
        return f.leading**e
    h_coeffs = power_of_x_mod(f, e)
    h_coeffs[0] += sign
    h = RatPolynomial(tuple(Fraction(c) for c in h_coeffs))
    if h.is_zero():
        return 0
    value = f.leading ** (e - h.degree) * _resultant_rational(f.to_rational(), h)
    value = Fraction(value)
    if value.denominator != 1:
        raise NonIntegralResultant(f"cyclotomic engine produced {value}")
    return value.numerator


_ENGINES: dict[Engine, Callable[[IntPolynomial, IntPolynomial], int]] = {
    Engine.SYLVESTER: resultant_sylvester,
    Engine.REMAINDER_MATRIX: resultant_remainder_matrix,
    Engine.EUCLIDEAN: resultant_euclidean,
}


def resultant(
    f: IntPolynomial, g: IntPolynomial, engine: Engine | str = Engine.SYLVESTER
) -> ResultantResult:
    engine = Engine(engine)
    value = _ENGINES[engine](f, g)
    return ResultantResult(value, engine, f, g, degenerate=f.is_zero() or g.is_zero())


def all_engines(f: IntPolynomial, g: IntPolynomial) -> dict[Engine, int]:
    return {eng: fn(f, g) for eng, fn in _ENGINES.items()}
