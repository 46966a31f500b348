"""The invariant E_l = sum of sigma_{j-1}/sigma_j, its comparison with the lct, and the equality classifier."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from math import inf

from .errors import NotApplicable
from .monomials import (
    MonomialIdeal,
    codimension,
    max_ideal_power,
    permute,
    unit_vector,
)
from .multiplicities import RegimeConfig, sigma
from .polytope import integral_closure
from .thresholds import lct_monomial

log = logging.getLogger(__name__)


def dp_invariant(I: MonomialIdeal, l: int, config: RegimeConfig = RegimeConfig()) -> Fraction:
    if l < 1:
        raise ValueError("l must be positive")
    sigmas = [sigma(I, j, config) for j in range(l + 1)]
    if sigmas[l] == inf:
        raise ValueError(f"l = {l} exceeds the codimension of I")
    return sum((Fraction(sigmas[j - 1], sigmas[j]) for j in range(1, l + 1)), Fraction(0))


@dataclass(frozen=True)
class DPReport:
    E: Fraction
    c: Fraction

    @property
    def slack(self) -> Fraction:
        return self.c - self.E

    @property
    def equality(self) -> bool:
        return self.E == self.c


def check_bound(I: MonomialIdeal, l: int | None = None,
                config: RegimeConfig = RegimeConfig()) -> DPReport:
    """E_l(I) against lct(I); l defaults to the codimension."""
    if I.is_zero() or I.is_unit():
        raise ValueError("need a proper nonzero ideal")
    if l is None:
        l = codimension(I)
    return DPReport(dp_invariant(I, l, config), lct_monomial(I))


@dataclass(frozen=True)
class ClassificationWitness:
    """Model variable i is sent to coordinate permutation[i]."""
    permutation: tuple[int, ...]
    degrees: tuple[int, ...]


def model_ideal(n: int, degrees: tuple[int, ...], perm: tuple[int, ...]) -> MonomialIdeal:
    """Closure of (x_{perm[0]}^{d_1}, ..., x_{perm[l-1]}^{d_l})."""
    gens = tuple(unit_vector(n, i, d) for i, d in enumerate(degrees))
    return integral_closure(permute(MonomialIdeal(n, gens), perm))


def _degree_candidates(I: MonomialIdeal, l: int, E: Fraction, config: RegimeConfig):
    sig = [sigma(I, j, config) for j in range(l + 1)]
    ratios = [Fraction(sig[j], sig[j - 1]) for j in range(1, l + 1)]
    if all(r.denominator == 1 for r in ratios):
        forced = tuple(int(r) for r in ratios)
        if list(forced) == sorted(forced):
            yield forced
    top = max(sum(g) for g in I.gens)
    for d in combinations_with_replacement(range(1, top + 1), l):
        if sum(Fraction(1, x) for x in d) == E:
            yield d


def classify_equality(I: MonomialIdeal, l: int | None = None,
                      config: RegimeConfig = RegimeConfig()) -> ClassificationWitness | None:
    """Find d_1 <= ... <= d_l and a coordinate permutation matching closure(I) to the model."""
    report = check_bound(I, l, config)
    if not report.equality:
        raise NotApplicable(f"E = {report.E} is strictly below c = {report.c}")
    n = I.dim
    if l is None:
        l = codimension(I)
    target = integral_closure(I)
    tried = set()
    for degrees in _degree_candidates(I, l, report.E, config):
        if degrees in tried:
            continue
        tried.add(degrees)
        for perm in permutations(range(n)):
            if model_ideal(n, degrees, perm) == target:
                return ClassificationWitness(perm, degrees)
    log.warning("equality holds for %s but no permutation witness was found", I)
    return None


@dataclass(frozen=True)
class TwoDegreeReport:
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def two_degree_check(I1: MonomialIdeal, d2: int) -> TwoDegreeReport:
    """lct(I1 + m^d2) against n/d2 + lct(I1)(d2 - d1)/d2 for I1 generated in one degree d1 < d2."""
    if I1.is_zero():
        raise ValueError("I1 must be nonzero")
    degrees = {sum(g) for g in I1.gens}
    if len(degrees) != 1:
        raise ValueError(f"I1 is not generated in a single degree: {sorted(degrees)}")
    d1 = degrees.pop()
    if not 0 < d1 < d2:
        raise ValueError("need 0 < d1 < d2")
    n = I1.dim
    lhs = lct_monomial(I1 + max_ideal_power(n, d2))
    rhs = Fraction(n, d2) + lct_monomial(I1) * Fraction(d2 - d1, d2)
    return TwoDegreeReport(lhs, rhs)
