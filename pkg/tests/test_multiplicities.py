import itertools
from math import factorial, inf

import pytest
from hypothesis import given, settings
from scipy.spatial import ConvexHull

from corpus import mprimary_ideals
from singthresh.monomials import MonomialIdeal, length_quotient, max_ideal, max_ideal_power, order, power
from singthresh.multiplicities import (
    RegimeConfig, RegimeNotReached, hilbert_samuel, length_grid, minkowski_check, mixed_multiplicities,
    sigma, sigma_sequence,
)


def volume_multiplicity(I):
    """n! times the covolume of the Newton polyhedron, from a convex hull."""
    n = I.dim
    if n == 1:
        return I.gens[0][0]
    B = max(max(g) for g in I.gens)
    pts = {tuple(B if m else x for x, m in zip(g, mask))
           for g in I.gens for mask in itertools.product([0, 1], repeat=n)}
    return factorial(n) * (B**n - ConvexHull(list(pts)).volume)


def test_length_grid_against_products():
    I = MonomialIdeal(2, ((3, 0), (1, 1), (0, 2)))
    L = length_grid(I, 3, 3)
    for r in range(4):
        for s in range(4):
            assert L[r, s] == length_quotient(power(I, r) * max_ideal_power(2, s))


@given(mprimary_ideals(max_n=3, max_deg=6))
@settings(max_examples=60, deadline=None)
def test_top_mixed_multiplicity_is_normalised_covolume(I):
    e = mixed_multiplicities(I)
    assert abs(e[-1] - volume_multiplicity(I)) < 1e-6
    assert e[-1] == hilbert_samuel(I)


@given(mprimary_ideals(max_n=3, max_deg=6))
@settings(max_examples=60, deadline=None)
def test_first_mixed_multiplicity_is_order_and_minkowski(I):
    e = mixed_multiplicities(I)
    assert e[0] == 1
    assert e[1] == order(I)
    assert minkowski_check(e).ok


@given(mprimary_ideals(max_n=2, max_deg=5))
@settings(max_examples=20, deadline=None)
def test_late_regime_start_agrees(I):
    late = RegimeConfig(start=I.dim * max(sum(g) for g in I.gens), max_start=64)
    assert mixed_multiplicities(I, late) == mixed_multiplicities(I)


def test_known_values():
    assert mixed_multiplicities(MonomialIdeal(2, ((2, 0), (0, 3)))) == (1, 2, 6)
    assert hilbert_samuel(max_ideal(3)) == 1
    assert mixed_multiplicities(MonomialIdeal(2, ((6, 0), (5, 1), (3, 2), (2, 3), (1, 4), (0, 6)))) == (1, 5, 28)
    a = MonomialIdeal(3, ((3, 0, 0), (1, 1, 0), (0, 3, 0), (0, 0, 4), (2, 0, 1)))
    assert mixed_multiplicities(a) == (1, 2, 6, 23)


def test_sigma_for_non_primary_ideals():
    I = MonomialIdeal(2, ((2, 0), (1, 1)))
    assert sigma_sequence(I) == (1, 2, inf)
    J = MonomialIdeal(3, ((2, 0, 0), (0, 3, 0)))
    assert sigma_sequence(J) == (1, 2, 6, inf)
    with pytest.raises(ValueError):
        sigma(I, 3)


def test_minkowski_report():
    assert minkowski_check((1, 2, 4)).ok
    assert minkowski_check((1, 3, 4)).failing_index == 1
    assert minkowski_check((1, 2, inf)).ok
    assert not minkowski_check((1, inf, 4)).ok


def test_regime_not_reached_is_reported():
    with pytest.raises(RegimeNotReached):
        mixed_multiplicities(MonomialIdeal(2, ((5, 0), (0, 7), (1, 1))), RegimeConfig(start=1, extent=3, max_start=0))


def test_rejects_non_primary():
    with pytest.raises(ValueError):
        mixed_multiplicities(MonomialIdeal(2, ((1, 1),)))
