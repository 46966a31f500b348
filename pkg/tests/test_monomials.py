import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import monomial_ideals, mprimary_ideals
from singthresh.monomials import (
    DimensionMismatch, MonomialIdeal, codimension, colon, format_ideal, frobenius_power,
    ideal_contains, intersect, is_m_primary, length_quotient, max_ideal, max_ideal_power,
    minimalize, order, permute, pure_powers, restrict_coordinate, unit_ideal, zero_ideal,
)


def box(n, side):
    return itertools.product(range(side), repeat=n)


def members(I, side):
    return {u for u in box(I.dim, side) if u in I}


def test_canonical_form_drops_multiples_and_duplicates():
    I = MonomialIdeal(2, ((2, 0), (2, 1), (0, 3), (2, 0), (1, 3)))
    assert I.gens == ((0, 3), (2, 0))
    assert I == MonomialIdeal(2, ((0, 3), (2, 0)))
    assert hash(I) == hash(MonomialIdeal(2, ((2, 0), (0, 3))))


def test_zero_and_unit():
    assert zero_ideal(2).is_zero() and not zero_ideal(2).is_unit()
    assert unit_ideal(3).gens == ((0, 0, 0),)
    assert MonomialIdeal(2, ((0, 0), (4, 4))).is_unit()


def test_rejects_bad_vectors():
    with pytest.raises(ValueError):
        MonomialIdeal(2, ((1, -1),))
    with pytest.raises(ValueError):
        MonomialIdeal(2, ((1, 1, 1),))
    with pytest.raises(DimensionMismatch):
        MonomialIdeal(2, ((1, 0),)) + MonomialIdeal(3, ((1, 0, 0),))


def test_numpy_antichain_path_matches_small_path():
    vecs = list(itertools.product(range(1, 8), repeat=3))
    big = minimalize(3, vecs + [(7, 7, 0), (0, 3, 9)])
    assert big.gens == ((0, 3, 9), (1, 1, 1), (7, 7, 0))


@given(monomial_ideals(max_n=2), monomial_ideals(max_n=2))
@settings(max_examples=60, deadline=None)
def test_operations_agree_with_membership_sets(I, J):
    if I.dim != J.dim:
        return
    side = 12
    A, B = members(I, side), members(J, side)
    assert members(I + J, side) == A | B
    assert members(intersect(I, J), side) == A & B
    prod = {tuple(a + b for a, b in zip(u, v)) for u in I.gens for v in J.gens}
    assert members(I * J, side) == {w for w in box(I.dim, side) if any(all(x >= y for x, y in zip(w, g)) for g in prod)}


@given(monomial_ideals(max_n=2, max_deg=3), monomial_ideals(max_n=2, max_deg=3))
@settings(max_examples=60, deadline=None)
def test_colon_by_brute_force(I, J):
    if I.dim != J.dim:
        return
    side = 10
    K = colon(I, J)
    for u in box(I.dim, side - 4):
        inside = all(tuple(a + b for a, b in zip(u, g)) in I for g in J.gens)
        assert (u in K) == inside


@given(mprimary_ideals(max_n=3, max_deg=5))
@settings(max_examples=40, deadline=None)
def test_length_counts_standard_monomials(I):
    side = max(pure_powers(I)) + 1
    assert length_quotient(I) == sum(1 for u in box(I.dim, side) if u not in I)


def test_frobenius_power_and_pure_powers():
    J = MonomialIdeal(2, ((1, 1), (3, 0)))
    assert frobenius_power(J, 4) == MonomialIdeal(2, ((4, 4), (12, 0)))
    assert frobenius_power(2, 3) == MonomialIdeal(2, ((3, 0), (0, 3)))
    assert pure_powers(J) == [3, None]
    assert not is_m_primary(J)


def test_codimension_examples():
    assert codimension(MonomialIdeal(2, ((2, 0), (1, 1)))) == 1
    assert codimension(MonomialIdeal(3, ((1, 1, 0), (0, 1, 1), (1, 0, 1)))) == 2
    assert codimension(max_ideal(4)) == 4
    with pytest.raises(ValueError):
        codimension(unit_ideal(2))


def test_order_and_max_ideal_power():
    assert order(MonomialIdeal(2, ((2, 0), (1, 1)))) == 2
    assert len(max_ideal_power(3, 2).gens) == 6
    assert ideal_contains(max_ideal(3), max_ideal_power(3, 2))
    assert not ideal_contains(max_ideal_power(3, 2), max_ideal(3))


def test_restrict_and_permute():
    a = MonomialIdeal(3, ((3, 0, 0), (1, 1, 0), (0, 3, 0), (0, 0, 4), (2, 0, 1)))
    assert restrict_coordinate(a, 2) == MonomialIdeal(2, ((3, 0), (1, 1), (0, 3)))
    assert permute(MonomialIdeal(2, ((3, 0), (0, 2))), (1, 0)) == MonomialIdeal(2, ((0, 3), (2, 0)))


def test_format_ideal():
    assert format_ideal(MonomialIdeal(2, ((2, 0), (0, 3)))) == "(y^3, x^2)"
