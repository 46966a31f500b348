"""Log canonical and F-thresholds of monomial ideals, colon identities, Lojasiewicz exponents."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor, prod
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded
from .monomials import (
    MonomialIdeal,
    frobenius_power,
    is_m_primary,
    max_ideal,
    max_ideal_power,
    pure_powers,
    unit_ideal,
    zero_ideal,
)
from .polytope import member, mu

DEFAULT_BUDGET = 5_000_000


def lct_monomial(I: MonomialIdeal) -> Fraction:
    """Log canonical threshold of a monomial ideal: the reciprocal of its diagonal hit."""
    if I.is_zero():
        raise ValueError("the zero ideal has no threshold")
    if I.is_unit():
        raise ValueError("the unit ideal has infinite threshold")
    return 1 / mu(I)


def _shift(arr: np.ndarray, g: Sequence[int]) -> np.ndarray | None:
    """arr moved by +g inside its own box; None if g leaves the box."""
    if any(a >= s for a, s in zip(g, arr.shape)):
        return None
    out = np.zeros_like(arr)
    dst = tuple(slice(a, None) for a in g)
    src = tuple(slice(0, s - a) for a, s in zip(g, arr.shape))
    out[dst] = arr[src]
    return out


def nu_monomial(I: MonomialIdeal, J: MonomialIdeal, q: int,
                budget: int = DEFAULT_BUDGET) -> int:
    """Largest t with I^t not inside J^[q] (0 if there is none).

    Layered search over sums of generators of I that stay outside J^[q].
    """
    if I.dim != J.dim:
        raise ValueError("dimension mismatch")
    if not is_m_primary(J):
        raise ValueError("J must be m-primary")
    if I.is_unit():
        raise ValueError("I is not contained in the radical of J")
    if I.is_zero():
        return 0
    Jq = frobenius_power(J, q)
    box = tuple(pure_powers(Jq))
    size = prod(box)
    if size > budget:
        raise BudgetExceeded(f"{size} states exceed the budget {budget}", partial=0)
    inside = np.zeros(box, dtype=bool)
    for g in Jq.gens:
        inside[tuple(slice(a, None) for a in g)] = True
    layer = np.zeros(box, dtype=bool)
    layer[(0,) * I.dim] = True
    t = 0
    while True:
        nxt = np.zeros(box, dtype=bool)
        for g in I.gens:
            moved = _shift(layer, g)
            if moved is not None:
                nxt |= moved
        nxt &= ~inside
        if not nxt.any():
            return t
        layer = nxt
        t += 1


@dataclass(frozen=True)
class BracketStep:
    e: int
    q: int
    nu: int
    lower: Fraction
    upper: Fraction


def fpt_bracket_monomial(I: MonomialIdeal, p: int, e_max: int,
                         budget: int = DEFAULT_BUDGET) -> list[BracketStep]:
    """nu(p^e) for e = 1..e_max with a certified interval for the F-pure threshold.

    The interval is [nu/q, (nu + r)/q] where r = min(#generators, n): any
    r-generated ideal satisfies a^(nu q' + r(q'-1) + 1) in J^[q q'], and for
    monomial ideals nu does not depend on the field, so an n-generated
    reduction over an infinite field may replace I.
    """
    if p < 2:
        raise ValueError("p must be a prime")
    r = min(len(I.gens), I.dim)
    J = max_ideal(I.dim)
    steps: list[BracketStep] = []
    for e in range(1, e_max + 1):
        q = p**e
        try:
            nu = nu_monomial(I, J, q, budget)
        except BudgetExceeded as exc:
            raise BudgetExceeded(str(exc), partial=steps) from exc
        steps.append(BracketStep(e, q, nu, Fraction(nu, q), Fraction(nu + r, q)))
    for a, b in zip(steps, steps[1:]):
        if b.nu < p * a.nu:
            raise ArithmeticError(f"nu({b.q}) = {b.nu} < p * nu({a.q}) = {p * a.nu}")
    return steps


def colon_frobenius_maxideal(n: int, q: int, t: int) -> MonomialIdeal:
    """Closed form for (m^[q] : m^t)."""
    if n < 1 or q < 1 or t < 0:
        raise ValueError("need n >= 1, q >= 1, t >= 0")
    top = n * q - n + 1
    if t >= top:
        return unit_ideal(n)
    return frobenius_power(n, q) + max_ideal_power(n, top - t)


def _box_points(bounds: Sequence[int]) -> np.ndarray:
    grids = np.meshgrid(*(np.arange(b) for b in bounds), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def _brute_colon_pure(Q: Sequence[int], J: MonomialIdeal) -> MonomialIdeal:
    """(x_1^Q_1, ..., x_n^Q_n) : J by testing every monomial below the corner."""
    n = len(Q)
    pure = [tuple(Q[i] if j == i else 0 for j in range(n)) for i in range(n)]
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    U = _box_points(Q)
    Q = np.array(Q)
    ok = np.ones(len(U), dtype=bool)
    for g in J.gens:
        ok &= np.any(U + np.array(g) >= Q, axis=1)
    found = [tuple(int(x) for x in u) for u in U[ok]]
    return MonomialIdeal(n, tuple(pure + found))


def brute_colon_frobenius_maxideal(n: int, q: int, t: int) -> MonomialIdeal:
    return _brute_colon_pure([q] * n, max_ideal_power(n, t))


@dataclass(frozen=True)
class MonomialValuation:
    weights: tuple[Fraction, ...]

    def __init__(self, weights: Sequence[int | Fraction]):
        w = tuple(Fraction(x) for x in weights)
        if any(x < 0 for x in w):
            raise ValueError("weights must be non-negative")
        object.__setattr__(self, "weights", w)

    @property
    def dim(self) -> int:
        return len(self.weights)

    def __call__(self, u: Sequence[int]) -> Fraction:
        return sum((w * a for w, a in zip(self.weights, u)), Fraction(0))


def valuation_ideal(v: MonomialValuation, ell: int | Fraction, strict: bool = False) -> MonomialIdeal:
    """Monomials u with v(u) >= ell, or v(u) > ell when strict."""
    n = v.dim
    ell = Fraction(ell)
    if ell < 0 or (ell == 0 and not strict):
        return unit_ideal(n)
    positive = [i for i, w in enumerate(v.weights) if w > 0]
    if not positive:
        return zero_ideal(n)

    def least(i: int, rest: Fraction) -> int:
        # smallest a >= 0 with w_i * a >= rest (or > rest)
        x = rest / v.weights[i]
        a = floor(x) + 1 if strict else ceil(x)
        return max(a, 0)

    last = positive[-1]
    others = positive[:-1]
    bounds = [least(i, ell) for i in others]
    gens = []
    for combo in product(*(range(b + 1) for b in bounds)):
        u = [0] * n
        for i, a in zip(others, combo):
            u[i] = a
        u[last] = least(last, ell - v(u))
        gens.append(tuple(u))
    return MonomialIdeal(n, tuple(gens))


@dataclass(frozen=True)
class ColonCheck:
    lhs: MonomialIdeal
    rhs: MonomialIdeal

    @property
    def agree(self) -> bool:
        return self.lhs == self.rhs


def valuation_colon_check(v: MonomialValuation, q: int, ell: int | Fraction) -> ColonCheck:
    """Compare ((x^q) : a_ell) by brute force with (x^q) + a^+_{(q-1) v(x_1...x_n) - ell}."""
    n = v.dim
    lhs = _brute_colon_pure([q] * n, valuation_ideal(v, ell))
    threshold = (q - 1) * v((1,) * n) - Fraction(ell)
    rhs = frobenius_power(n, q) + valuation_ideal(v, threshold, strict=True)
    return ColonCheck(lhs, rhs)


def lojasiewicz_exponent(I: MonomialIdeal) -> int | float:
    """Least t with m^t inside the integral closure of I; infinity if I is not m-primary."""
    if I.is_unit():
        return 0
    if I.is_zero() or not is_m_primary(I):
        return float("inf")
    top = max(pure_powers(I))
    for t in range(1, top + 1):
        if all(member(I, u) for u in max_ideal_power(I.dim, t).gens):
            return t
    return top
