"""Desk-scale property suites behind ``resultmod selftest``.

Each random suite generates its cases up front from a fixed seed and checks
them in order of increasing size, so the first failure reported is the
smallest failing case that was generated.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable

from .family import sweep_theorem1
from .linalg import minor_valuations, rank_mod, reduce_mod, rref_mod
from .lucas import (
    LucasParams,
    check_theorem4,
    legendre,
    lucas_v_exact,
    lucas_v_mod,
    resultant_lucas_identity,
)
from .modular import analyze, remainder_matrix
from .parser import parse_poly
from .poly import IntPolynomial, format_poly, substitute_power
from .primes import odd_primes_upto
from .resultants import (
    all_engines,
    cyclotomic_style_resultant,
    resultant_sylvester,
)

EXAMPLE_F = "x^6 + 1"
EXAMPLE_G = "(x+1)^6 + 1"
EXAMPLE_MATRIX = [
    [1, -6, -15, -20, -15, -6],
    [6, 1, -6, -15, -20, -15],
    [15, 6, 1, -6, -15, -20],
    [20, 15, 6, 1, -6, -15],
    [15, 20, 15, 6, 1, -6],
    [6, 15, 20, 15, 6, 1],
]
EXAMPLE_RREF = [
    [1, 0, 0, 7, 4, 8],
    [0, 1, 0, 4, 0, 3],
    [0, 0, 1, 8, 3, 11],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    cases: int
    failure: str = ""


def random_poly(rng: random.Random, max_degree: int = 6, bound: int = 9) -> IntPolynomial:
    while True:
        d = rng.randint(0, max_degree)
        f = IntPolynomial(tuple(rng.randint(-bound, bound) for _ in range(d + 1)))
        if not f.is_zero():
            return f


def _size(*polys: IntPolynomial) -> tuple:
    return (
        sum(len(p.coeffs) for p in polys),
        sum(abs(c) for p in polys for c in p.coeffs),
    )


def _run_cases(
    name: str, cases: Iterable, check: Callable, describe: Callable = repr, key=None
) -> SuiteResult:
    cases = list(cases)
    if key is not None:
        cases.sort(key=key)
    for case in cases:
        try:
            ok = check(case)
        except Exception as exc:  # noqa: BLE001 - reported as a failing case
            return SuiteResult(name, False, len(cases), f"{describe(case)}: {exc!r}")
        if not ok:
            return SuiteResult(name, False, len(cases), describe(case))
    return SuiteResult(name, True, len(cases))


def _fmt(*polys: IntPolynomial) -> str:
    return ", ".join(format_poly(p) for p in polys)


def suite_worked_example() -> SuiteResult:
    f, g = parse_poly(EXAMPLE_F), parse_poly(EXAMPLE_G)
    A = remainder_matrix(f, g)
    checks = [
        set(all_engines(f, g).values()) == {175760},
        175760 == 2**4 * 5 * 13**3,
        A.to_rows() == EXAMPLE_MATRIX,
        rref_mod(reduce_mod(A, 13)).to_rows() == EXAMPLE_RREF,
        rank_mod(reduce_mod(A, 13)) == 3,
        analyze(f, g, 13, strict=True).common_roots == (5, 6, 7),
        all(minor_valuations(A, 13, k) >= k - 3 for k in (4, 5, 6)),
    ]
    bad = [i for i, ok in enumerate(checks) if not ok]
    return SuiteResult("worked_example", not bad, len(checks), f"checks {bad} failed" if bad else "")


def suite_cross_engine(rng: random.Random, count: int) -> SuiteResult:
    pairs = [(random_poly(rng), random_poly(rng)) for _ in range(count)]
    return _run_cases(
        "cross_engine",
        pairs,
        lambda p: len(set(all_engines(*p).values())) == 1,
        lambda p: _fmt(*p),
        key=lambda p: _size(*p),
    )


def suite_planted_root(rng: random.Random, count: int) -> SuiteResult:
    cases = []
    for _ in range(count):
        r = rng.randint(-5, 5)
        lin = IntPolynomial((-r, 1))
        cases.append((lin * random_poly(rng, 4), lin * random_poly(rng, 4)))
    return _run_cases(
        "property_ii_common_root",
        cases,
        lambda p: all(v == 0 for v in all_engines(*p).values()),
        lambda p: _fmt(*p),
        key=lambda p: _size(*p),
    )


def suite_swap(rng: random.Random, count: int) -> SuiteResult:
    pairs = [(random_poly(rng), random_poly(rng)) for _ in range(count)]

    def check(p):
        f, g = p
        return resultant_sylvester(f, g) == (-1) ** (f.degree * g.degree) * resultant_sylvester(g, f)

    return _run_cases("property_iii_swap", pairs, check, lambda p: _fmt(*p), key=lambda p: _size(*p))


def suite_multiplicative(rng: random.Random, count: int) -> SuiteResult:
    triples = [(random_poly(rng, 3), random_poly(rng, 3), random_poly(rng, 3)) for _ in range(count)]

    def check(t):
        f, g, h = t
        R = resultant_sylvester
        return R(f * h, g) == R(f, g) * R(h, g) and R(f, g * h) == R(f, g) * R(f, h)

    return _run_cases(
        "property_iv_multiplicative", triples, check, lambda t: _fmt(*t), key=lambda t: _size(*t)
    )


def suite_reduction(rng: random.Random, count: int) -> SuiteResult:
    cases = []
    while len(cases) < count:
        f = random_poly(rng, 4)
        if f.degree == 0:
            continue
        v = random_poly(rng, 3)
        h = IntPolynomial(tuple(rng.randint(-9, 9) for _ in range(rng.randint(1, f.degree))))
        if h.is_zero():
            continue
        cases.append((f, v, h))

    def check(c):
        f, v, h = c
        g = v * f + h
        return resultant_sylvester(f, g) == f.leading ** (g.degree - h.degree) * resultant_sylvester(f, h)

    return _run_cases("property_v_reduction", cases, check, lambda c: _fmt(*c), key=lambda c: _size(*c))


def suite_substitution(rng: random.Random, count: int) -> SuiteResult:
    cases = [(random_poly(rng, 4), random_poly(rng, 4), rng.choice((2, 3))) for _ in range(count)]

    def check(c):
        f, g, p = c
        lhs = resultant_sylvester(substitute_power(f, p), substitute_power(g, p))
        return lhs == resultant_sylvester(f, g) ** p

    return _run_cases(
        "property_vi_substitution",
        cases,
        check,
        lambda c: f"{_fmt(c[0], c[1])}, p={c[2]}",
        key=lambda c: _size(c[0], c[1]),
    )


def suite_cyclotomic(rng: random.Random, count: int) -> SuiteResult:
    cases = [(random_poly(rng, 4), rng.randint(1, 20), rng.choice((-1, 1))) for _ in range(count)]

    def check(c):
        f, e, s = c
        target = IntPolynomial.monomial(e) + IntPolynomial.constant(s)
        return cyclotomic_style_resultant(f, e, s) == resultant_sylvester(f, target)

    return _run_cases("cyclotomic_engine", cases, check, repr, key=lambda c: (c[1], _size(c[0])))


def suite_theorem1_family(primes=(3, 5, 7)) -> SuiteResult:
    total = 0
    for q in primes:
        sweep = sweep_theorem1(q, 3)
        total += sweep.pairs
        if not sweep.ok:
            name = next(k for k, v in sweep.violations.items() if v)
            f, g = sweep.examples[name][0]
            return SuiteResult("theorem1_family", False, total, f"q={q} {name}: {_fmt(f, g)}")
    return SuiteResult("theorem1_family", True, total)


def suite_lucas(rng: random.Random, count: int) -> SuiteResult:
    cases = []
    for _ in range(count):
        cases.append(
            (rng.randint(0, 200), LucasParams(rng.randint(-20, 20), rng.randint(-20, 20)), rng.randint(2, 10**6))
        )
    return _run_cases(
        "lucas_fast_doubling",
        cases,
        lambda c: lucas_v_mod(c[0], c[1], c[2]) == lucas_v_exact(c[0], c[1]) % c[2],
        key=lambda c: c[0],
    )


def suite_theorem4(rng: random.Random, per_prime: int, limit: int = 100) -> SuiteResult:
    cases = []
    for q in odd_primes_upto(limit):
        found = 0
        while found < per_prime:
            params = LucasParams(rng.randint(-50, 50), rng.randint(-50, 50))
            if params.Q % q and legendre(params.discriminant, q) == 1:
                cases.append((params, q))
                found += 1
    return _run_cases(
        "theorem4", cases, lambda c: all(r.holds for r in check_theorem4(*c)), key=lambda c: c[1]
    )


def suite_bridge(rng: random.Random, per_prime: int, limit: int = 31) -> SuiteResult:
    cases = [
        (LucasParams(rng.randint(-9, 9), rng.randint(-9, 9)), q)
        for q in odd_primes_upto(limit)
        for _ in range(per_prime)
    ]
    return _run_cases(
        "bridge_identity", cases, lambda c: resultant_lucas_identity(*c)[2], key=lambda c: c[1]
    )


def run_all(seed: int = 20240601) -> list[SuiteResult]:
    rng = random.Random(seed)
    return [
        suite_worked_example(),
        suite_cross_engine(rng, 100),
        suite_planted_root(rng, 50),
        suite_swap(rng, 100),
        suite_multiplicative(rng, 50),
        suite_reduction(rng, 50),
        suite_substitution(rng, 50),
        suite_cyclotomic(rng, 50),
        suite_theorem1_family(),
        suite_lucas(rng, 200),
        suite_theorem4(rng, 5),
        suite_bridge(rng, 3),
    ]
