import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import square_table
from resultmod.linalg import valuation
from resultmod.lucas import (
    LUCAS,
    PELL_LUCAS,
    LucasParams,
    check_corollary2,
    check_theorem4,
    legendre,
    lucas_number,
    lucas_v_exact,
    lucas_v_mod,
    pell_lucas_number,
    resultant_lucas_identity,
    survey_section31,
    survey_section32,
)
from resultmod.primes import NotPrimeError
from resultmod.reports import CongruenceReport

params_st = st.builds(LucasParams, st.integers(-30, 30), st.integers(-30, 30))


def test_params_discriminant():
    p = LucasParams(3, 2)
    assert p.discriminant == 9 - 8
    assert p.characteristic().coeffs == (2, -3, 1)


class TestExact:
    def test_initial_terms(self):
        p = LucasParams(7, 3)
        assert lucas_v_exact(0, p) == 2
        assert lucas_v_exact(1, p) == 7

    def test_lucas_numbers(self):
        assert [lucas_number(n) for n in range(11)] == [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123]

    def test_pell_lucas_numbers(self):
        assert [pell_lucas_number(n) for n in range(7)] == [2, 2, 6, 14, 34, 82, 198]

    def test_cap(self):
        with pytest.raises(ValueError):
            lucas_v_exact(11, LUCAS, cap=10)

    @given(params_st, st.integers(0, 100))
    def test_doubling_identity(self, p, n):
        assert lucas_v_exact(2 * n, p) == lucas_v_exact(n, p) ** 2 - 2 * p.Q**n


class TestModular:
    def test_examples(self):
        assert lucas_v_mod(10, LUCAS, 121) == 123 % 121 == 2
        assert lucas_v_mod(0, LucasParams(5, 9), 3) == 2
        assert lucas_v_mod(6, PELL_LUCAS, 49) == 198 % 49 == 2

    @given(st.integers(0, 200), params_st, st.integers(2, 10**9))
    def test_matches_exact(self, n, p, m):
        assert lucas_v_mod(n, p, m) == lucas_v_exact(n, p) % m

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            lucas_v_mod(3, LUCAS, 1)


class TestLegendre:
    def test_examples(self):
        assert legendre(5, 11) == 1
        assert legendre(22, 11) == 0
        assert legendre(2, 7) == 1
        assert legendre(5, 7) == -1

    @pytest.mark.parametrize("q", [3, 5, 7, 11, 13, 101])
    def test_against_square_table(self, q):
        squares = square_table(q)
        for a in range(-q, 2 * q):
            expected = 0 if a % q == 0 else (1 if a % q in squares else -1)
            assert legendre(a, q) == expected


class TestSquareModulusCongruences:
    def test_lucas_q11(self):
        r12, r13 = check_theorem4(LUCAS, 11)
        assert (r12.label, r12.lhs, r12.rhs, r12.holds) == ("eq12", 2, 2, True)
        assert lucas_v_exact(10, LUCAS) % 121 == r12.lhs
        assert lucas_v_exact(5, LUCAS) ** 2 == 121
        assert (r13.lhs, r13.rhs, r13.holds) == (0, 0, True)

    def test_precondition_legendre(self):
        r12, r13 = check_theorem4(LUCAS, 7)
        assert not r12.preconditions_met and not r13.preconditions_met
        assert "Legendre" in r12.reason
        assert not r12.violated

    def test_precondition_q_divisible(self):
        r12, _ = check_theorem4(LucasParams(1, 22), 11)
        assert not r12.preconditions_met

    def test_rejects_even_or_composite(self):
        with pytest.raises(NotPrimeError):
            check_theorem4(LUCAS, 2)
        with pytest.raises(NotPrimeError):
            check_theorem4(LUCAS, 21)

    def test_random_sweep(self):
        rng = random.Random(4)
        for q in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97):
            done = 0
            while done < 20:
                p = LucasParams(rng.randint(-100, 100), rng.randint(-100, 100))
                if p.Q % q == 0 or legendre(p.discriminant, q) != 1:
                    continue
                assert all(r.holds and r.preconditions_met for r in check_theorem4(p, q))
                done += 1


class TestShiftedParameters:
    def test_k_zero_matches_theorem4(self):
        for q in (11, 19, 29):
            base = check_theorem4(LUCAS, q)
            shifted = check_corollary2(0, LUCAS, q)
            for a, b in zip(base, shifted):
                assert (a.lhs, a.rhs, a.holds, a.preconditions_met) == (
                    b.lhs, b.rhs, b.holds, b.preconditions_met,
                )

    def test_lucas_k1(self):
        r15, r16 = check_corollary2(1, LUCAS, 11)
        # V_10(3, 1) checked directly
        assert lucas_v_exact(10, LucasParams(3, 1)) % 121 == r15.lhs == 2
        assert r15.label == "eq15" and r15.holds and r16.holds

    def test_shift_hitting_zero(self):
        # k^2 + k - 1 == 0 mod 11 at k = 3 (9 + 3 - 1 = 11)
        r15, _ = check_corollary2(3, LUCAS, 11)
        assert not r15.preconditions_met

    @given(params_st, st.integers(-50, 50))
    def test_discriminant_identity(self, p, k):
        assert p.shifted(k).discriminant == p.discriminant


class TestSurveys:
    def test_section31_q11(self):
        reports = survey_section31(11)
        by_label = {(r.label, r.details.get("k")): r for r in reports}
        assert by_label[("eq19", 0)].lhs == 2 and by_label[("eq19", 0)].holds
        assert by_label[("eq20", 0)].rhs == 0 and by_label[("eq20", 0)].holds
        assert not any(r.violated for r in reports)

    def test_section31_q19_cross_checked(self):
        reports = survey_section31(19)
        assert reports[0].lhs == lucas_v_exact(18, LUCAS) % 361 == 2
        assert not any(r.violated for r in reports)

    def test_section32(self):
        reports = survey_section32(7)
        assert reports[0].lhs == 198 % 49 == 2
        assert reports[1].lhs == 14**2 % 49 == 0
        r17 = survey_section32(17)
        assert r17[0].lhs == lucas_v_exact(16, PELL_LUCAS) % 289 == 2
        assert not any(r.violated for r in reports + r17)

    def test_skipped_shifts_are_reported(self):
        reports = survey_section31(11)
        skipped = {r.details["k"] for r in reports if not r.preconditions_met}
        assert skipped == {k for k in range(11) if (k * k + k - 1) % 11 == 0}

    def test_rejects_wrong_class(self):
        with pytest.raises(ValueError):
            survey_section31(7)
        with pytest.raises(ValueError):
            survey_section32(11)


class TestBridge:
    @pytest.mark.parametrize(
        "params, q, expected",
        [(LUCAS, 11, -121), (LucasParams(3, 2), 5, 0), (PELL_LUCAS, 7, -196)],
    )
    def test_examples(self, params, q, expected):
        r, closed, match = resultant_lucas_identity(params, q)
        assert r == closed == expected and match

    def test_pell_valuation(self):
        assert valuation(-196, 7) == 2

    def test_range(self):
        with pytest.raises(ValueError):
            resultant_lucas_identity(LUCAS, 103)

    @given(params_st, st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23]))
    def test_theorem1_consistency(self, p, q):
        r, _, match = resultant_lucas_identity(p, q)
        assert match
        if p.Q % q and legendre(p.discriminant, q) == 1:
            assert valuation(r, q) >= 2


def test_report_invariant():
    r = CongruenceReport.build("eq12", 5, 2, 27, 2)
    assert r.lhs == 2 and r.holds and r.modulus == 25
    r = CongruenceReport.build("eq12", 5, 2, 3, 2, preconditions_met=False)
    assert not r.holds and not r.violated
