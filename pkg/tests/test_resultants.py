import random

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st
from sympy.polys.subresultants_qq_zz import res_z

from oracles import from_roots, polys, product_formula_resultant
from resultmod.parser import parse_poly as P
from resultmod.poly import IntPolynomial, substitute_power
from resultmod.resultants import (
    Engine,
    all_engines,
    cyclotomic_style_resultant,
    remainder_rows,
    resultant,
    resultant_euclidean,
    resultant_remainder_matrix,
    resultant_sylvester,
    sylvester_matrix,
)

ENGINES = [resultant_sylvester, resultant_remainder_matrix, resultant_euclidean]
X = sympy.symbols("x")


def sympy_resultant(f, g):
    # subresultant PRS in Z[x]; sympy.resultant itself returns +1 for R(x + 1, x^3)
    fs = sum(c * X**i for i, c in enumerate(f.coeffs))
    gs = sum(c * X**i for i, c in enumerate(g.coeffs))
    return int(res_z(fs, gs, X))


def x_pow_plus(e, s):
    return IntPolynomial.monomial(e) + IntPolynomial.constant(s)


@pytest.mark.parametrize("engine", ENGINES)
class TestWorkedValues:
    def test_worked_example(self, engine):
        assert engine(P("x^6+1"), P("(x+1)^6+1")) == 175760 == 2**4 * 5 * 13**3

    def test_common_root(self, engine):
        assert engine(P("x-2"), P("x-2")) == 0

    def test_product_formula(self, engine):
        g = P("x+3")
        expected = product_formula_resultant(1, [1, -1], g)
        assert expected == 8
        assert engine(P("x^2-1"), g) == 8

    def test_constant_base_case(self, engine):
        assert engine(P("x^2+x+1"), P("5")) == 25

    def test_linear_against_quadratic(self, engine):
        g = P("x^2+1")
        assert product_formula_resultant(1, [3], g) == 10
        assert engine(P("x-3"), g) == 10

    def test_remainder_small_cases(self, engine):
        assert engine(P("x^2+1"), P("x")) == 1
        assert engine(P("x-1"), P("x")) == 1

    def test_sign_convention(self, engine):
        assert engine(P("x-7"), P("x-2")) == 7 - 2

    def test_zero_polynomial(self, engine):
        assert engine(IntPolynomial(), P("x+1")) == 0
        assert engine(P("x+1"), IntPolynomial()) == 0

    def test_constants(self, engine):
        assert engine(P("3"), P("5")) == 1
        assert engine(P("3"), P("x^2+1")) == 9


def test_remainder_rows_reproduce_matrix5():
    rows = remainder_rows(P("x^6+1"), P("(x+1)^6+1"))
    assert rows[0] == [1, -6, -15, -20, -15, -6]
    assert rows[-1] == [6, 15, 20, 15, 6, 1]


def test_remainder_rows_small():
    assert remainder_rows(P("x^2+1"), P("x")) == [[0, -1], [1, 0]]


def test_sylvester_layout():
    S = sylvester_matrix(P("x^2+2*x+3"), P("4*x+5"))
    assert S.to_rows() == [[1, 2, 3], [4, 5, 0], [0, 4, 5]]


def test_resultant_wrapper_flags_degenerate():
    res = resultant(IntPolynomial(), P("x"), "euclidean")
    assert res.value == 0 and res.degenerate and res.engine is Engine.EUCLIDEAN
    assert not resultant(P("x"), P("x+1")).degenerate


@given(polys(), polys())
def test_engines_agree_with_sympy(f, g):
    values = set(all_engines(f, g).values())
    assert values == {sympy_resultant(f, g)}


def test_cross_engine_500_pairs():
    rng = random.Random(7)
    for _ in range(500):
        f = g = IntPolynomial()
        while f.is_zero():
            f = IntPolynomial(tuple(rng.randint(-9, 9) for _ in range(rng.randint(1, 7))))
        while g.is_zero():
            g = IntPolynomial(tuple(rng.randint(-9, 9) for _ in range(rng.randint(1, 7))))
        assert len(set(all_engines(f, g).values())) == 1, (f, g)


@given(
    st.integers(-5, 5).filter(bool),
    st.lists(st.integers(-6, 6), min_size=1, max_size=4),
    polys(max_degree=4),
)
def test_property_i_product_formula(lead, roots, g):
    f = from_roots(lead, roots)
    expected = product_formula_resultant(lead, roots, g)
    for engine in ENGINES:
        assert engine(f, g) == expected


@given(st.integers(-5, 5), polys(max_degree=3), polys(max_degree=3))
def test_property_ii_planted_root(r, u, w):
    lin = IntPolynomial((-r, 1))
    for engine in ENGINES:
        assert engine(lin * u, lin * w) == 0


@given(polys(), polys())
def test_property_ii_nonzero_without_common_root(f, g):
    fs, gs = (sympy.Poly(p.descending(), X) for p in (f, g))
    assume(sympy.gcd(fs, gs).degree() == 0)
    assert resultant_sylvester(f, g) != 0


@given(polys(), polys())
def test_property_iii_swap(f, g):
    for engine in ENGINES:
        assert engine(f, g) == (-1) ** (f.degree * g.degree) * engine(g, f)


@given(polys(max_degree=3), polys(max_degree=3), polys(max_degree=3))
def test_property_iv_multiplicative(f, g, h):
    for engine in ENGINES:
        assert engine(f * h, g) == engine(f, g) * engine(h, g)
        assert engine(f, g * h) == engine(f, g) * engine(f, h)


@given(polys(max_degree=4), polys(max_degree=3), polys(max_degree=3))
def test_property_v_reduction(f, v, h):
    assume(f.degree >= 1 and h.degree < f.degree)
    g = v * f + h
    m, d = g.degree, h.degree
    for engine in ENGINES:
        assert engine(f, g) == f.leading ** (m - d) * engine(f, h)


@given(polys(max_degree=4), polys(max_degree=4), st.sampled_from([2, 3]))
def test_property_vi_substitution(f, g, p):
    for engine in ENGINES:
        assert engine(substitute_power(f, p), substitute_power(g, p)) == engine(f, g) ** p


class TestCyclotomic:
    def test_golden_minus(self):
        # 1 + Q^{10} - L_10 with Q = -1, L_10 = 123
        assert cyclotomic_style_resultant(P("x^2-x-1"), 10, -1) == 1 + 1 - 123 == -121

    def test_golden_plus(self):
        # Q^5 + V_5 + 1 with Q = -1, V_5 = 11
        assert cyclotomic_style_resultant(P("x^2-x-1"), 5, 1) == -1 + 11 + 1 == 11

    def test_common_root(self):
        for e in (1, 4, 17):
            assert cyclotomic_style_resultant(P("x-1"), e, -1) == 0

    def test_constant(self):
        assert cyclotomic_style_resultant(P("3"), 4, 1) == 81

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            cyclotomic_style_resultant(P("x+1"), 0, 1)
        with pytest.raises(ValueError):
            cyclotomic_style_resultant(P("x+1"), 3, 0)

    @given(polys(max_degree=5), st.integers(1, 30), st.sampled_from([-1, 1]))
    def test_matches_sylvester(self, f, e, s):
        assert cyclotomic_style_resultant(f, e, s) == resultant_sylvester(f, x_pow_plus(e, s))
