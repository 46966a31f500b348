import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import monomial_ideals, mprimary_ideals
from singthresh.errors import BudgetExceeded
from singthresh.monomials import (
    MonomialIdeal, frobenius_power, ideal_contains, max_ideal, max_ideal_power, power, restrict_coordinate,
)
from singthresh.polytope import integral_closure
from singthresh.thresholds import (
    MonomialValuation, brute_colon_frobenius_maxideal, colon_frobenius_maxideal, fpt_bracket_monomial,
    lct_monomial, lojasiewicz_exponent, nu_monomial, valuation_colon_check, valuation_ideal,
)


def brute_nu(I, J, q):
    Jq = frobenius_power(J, q)
    t = 0
    P = I
    while not ideal_contains(Jq, P):
        t += 1
        P = P * I
    return t


def test_howald_examples():
    assert lct_monomial(MonomialIdeal(2, ((2, 0), (0, 3)))) == Fraction(5, 6)
    assert lct_monomial(max_ideal(3)) == 3
    assert lct_monomial(MonomialIdeal(2, ((1, 1),))) == 1
    with pytest.raises(ValueError):
        lct_monomial(MonomialIdeal(2, ((0, 0),)))


@given(monomial_ideals(max_n=2, max_deg=4, max_gens=3), st.sampled_from([2, 3, 4, 5, 8, 9]))
@settings(max_examples=60, deadline=None)
def test_nu_matches_repeated_products(I, q):
    if I.is_zero() or I.is_unit():
        return
    J = max_ideal(I.dim)
    assert nu_monomial(I, J, q) == brute_nu(I, J, q)


def test_nu_examples():
    assert nu_monomial(MonomialIdeal(2, ((1, 1),)), max_ideal(2), 25) == 24
    assert nu_monomial(max_ideal(2), max_ideal(2), 4) == 6
    assert nu_monomial(MonomialIdeal(2, ((2, 0), (0, 3))), max_ideal(2), 9) == 6


def test_nu_budget_reports_partial():
    with pytest.raises(BudgetExceeded) as info:
        nu_monomial(max_ideal(3), max_ideal(3), 64, budget=100)
    assert info.value.partial is not None


@given(mprimary_ideals(max_n=2, max_deg=5, max_extra=3), st.sampled_from([2, 3, 5]))
@settings(max_examples=30, deadline=None)
def test_certified_bracket_contains_lct(I, p):
    c = lct_monomial(I)
    steps = fpt_bracket_monomial(I, p, 3)
    for s in steps:
        assert s.lower <= c <= s.upper
    for a, b in zip(steps, steps[1:]):
        assert b.nu >= p * a.nu


@given(st.integers(1, 3), st.integers(2, 9), st.integers(0, 25))
@settings(max_examples=60, deadline=None)
def test_maxideal_colon_formula(n, q, t):
    assert colon_frobenius_maxideal(n, q, t) == brute_colon_frobenius_maxideal(n, q, t)


def test_colon_brute_force_is_independent_of_formula():
    # (x^4, y^4) : (x, y)^3 computed by hand
    expected = MonomialIdeal(2, ((4, 0), (0, 4), (3, 1), (2, 2), (1, 3)))
    assert brute_colon_frobenius_maxideal(2, 4, 3) == expected


weights = st.lists(st.fractions(min_value=Fraction(1, 4), max_value=3, max_denominator=4), min_size=1, max_size=3)


@given(weights, st.sampled_from([2, 3, 4, 5]), st.fractions(min_value=0, max_value=6, max_denominator=3))
@settings(max_examples=60, deadline=None)
def test_valuation_colon_formula(w, q, ell):
    assert valuation_colon_check(MonomialValuation(w), q, ell).agree


def test_valuation_ideal():
    v = MonomialValuation([Fraction(1, 2), Fraction(1, 3)])
    assert valuation_ideal(v, 1) == MonomialIdeal(2, ((2, 0), (1, 2), (0, 3)))
    assert valuation_ideal(v, 1, strict=True) == MonomialIdeal(2, ((3, 0), (2, 1), (1, 2), (0, 4)))
    with pytest.raises(ValueError):
        MonomialValuation([-1])


@given(mprimary_ideals(max_n=3, max_deg=5))
@settings(max_examples=40, deadline=None)
def test_lojasiewicz_exponent_is_least(I):
    L = lojasiewicz_exponent(I)
    C = integral_closure(I)
    assert ideal_contains(C, max_ideal_power(I.dim, L))
    assert L == 1 or not ideal_contains(C, max_ideal_power(I.dim, L - 1))


def test_lojasiewicz_special_values():
    assert lojasiewicz_exponent(MonomialIdeal(2, ((1, 1),))) == float("inf")
    assert lojasiewicz_exponent(MonomialIdeal(2, ((0, 0),))) == 0
    a = MonomialIdeal(3, ((3, 0, 0), (1, 1, 0), (0, 3, 0), (0, 0, 4), (2, 0, 1)))
    assert lojasiewicz_exponent(a) == 4


@given(mprimary_ideals(min_n=2, max_n=3, max_deg=6))
@settings(max_examples=40, deadline=None)
def test_restriction_drop_is_at_least_inverse_lojasiewicz(I):
    L = lojasiewicz_exponent(I)
    for k in range(I.dim):
        assert lct_monomial(I) - lct_monomial(restrict_coordinate(I, k)) >= Fraction(1, L)


@given(monomial_ideals(max_n=3, max_deg=4), st.integers(1, 4))
@settings(max_examples=40, deadline=None)
def test_lct_scales_under_powers(I, m):
    if I.is_zero() or I.is_unit():
        return
    assert lct_monomial(power(I, m)) == lct_monomial(I) / m
    assert lct_monomial(integral_closure(I)) == lct_monomial(I)


@given(monomial_ideals(min_n=2, max_n=2, max_deg=4), monomial_ideals(min_n=2, max_n=2, max_deg=4))
@settings(max_examples=40, deadline=None)
def test_lct_subadditive(I, J):
    if any(K.is_zero() or K.is_unit() for K in (I, J)):
        return
    assert lct_monomial(I + J) <= lct_monomial(I) + lct_monomial(J)
