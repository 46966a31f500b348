"""Hilbert-Samuel and mixed multiplicities from lattice-point counts, and the sigma sequence.

Every number here is a finite difference of L(r, s) = length(R / I^r m^s).
A monomial u lies outside I^r m^s exactly when |u| - h_r(u) < s, where h_r(u)
is the least degree of an element of I^r dividing u; h_r is tabulated on a box
by h_r(u) = min over generators g <= u of |g| + h_{r-1}(u - g).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, inf
from typing import Sequence

import numpy as np

from .monomials import MonomialIdeal, codimension, is_m_primary, max_ideal_power, pure_powers

_FAR = np.iinfo(np.int64).max // 4


def length_grid(I: MonomialIdeal, r_max: int, s_max: int) -> np.ndarray:
    """L[r, s] = length(R / I^r m^s) for 0 <= r <= r_max, 0 <= s <= s_max."""
    if not is_m_primary(I):
        raise ValueError("length grid needs an m-primary ideal")
    n = I.dim
    a = pure_powers(I)
    box = tuple(r_max * ai + s_max + 1 for ai in a)
    degree = np.zeros(box, dtype=np.int64)
    for axis in range(n):
        shape = [1] * n
        shape[axis] = box[axis]
        degree = degree + np.arange(box[axis], dtype=np.int64).reshape(shape)
    out = np.zeros((r_max + 1, s_max + 1), dtype=np.int64)
    h = np.zeros(box, dtype=np.int64)
    for r in range(r_max + 1):
        if r:
            nxt = np.full(box, _FAR, dtype=np.int64)
            for g in I.gens:
                if any(x >= b for x, b in zip(g, box)):
                    continue
                dst = tuple(slice(x, None) for x in g)
                src = tuple(slice(0, b - x) for x, b in zip(g, box))
                np.minimum(nxt[dst], h[src] + sum(g), out=nxt[dst])
            h = nxt
        excess = np.where(h >= _FAR, -1, degree - h)
        counts = np.bincount(np.clip(excess, -1, s_max).ravel() + 1, minlength=s_max + 2)
        # L(r, s) = #{u : excess(u) < s}
        out[r] = np.cumsum(counts)[: s_max + 1]
    return out


def _mixed_difference(L: np.ndarray, r: int, s: int, j: int, k: int) -> int:
    """Apply j forward differences in r and k in s at (r, s)."""
    total = 0
    for a in range(j + 1):
        for b in range(k + 1):
            sign = (-1) ** (j - a + k - b)
            total += sign * comb(j, a) * comb(k, b) * int(L[r + a, s + b])
    return total


@dataclass(frozen=True)
class RegimeConfig:
    """Where the grid search starts and how many consecutive points must agree."""
    start: int | None = None
    extent: int = 3
    max_start: int = 64


class RegimeNotReached(ArithmeticError):
    pass


def _starts(I: MonomialIdeal, config: RegimeConfig):
    start = config.start if config.start is not None else 1
    while start <= config.max_start:
        yield start
        start *= 2
    raise RegimeNotReached(f"finite differences did not stabilise below start {config.max_start}")


@lru_cache(maxsize=2048)
def _mixed(I: MonomialIdeal, config: RegimeConfig) -> tuple[int, ...]:
    n = I.dim
    w = config.extent
    for start in _starts(I, config):
        top = start + w - 1 + n
        L = length_grid(I, top, top)
        values = []
        for j in range(n + 1):
            seen = {_mixed_difference(L, start + a, start + b, j, n - j)
                    for a in range(w) for b in range(w)}
            if len(seen) != 1:
                break
            values.append(seen.pop())
        else:
            return tuple(values)
    raise AssertionError("unreachable")


def mixed_multiplicities(I: MonomialIdeal, config: RegimeConfig = RegimeConfig()) -> tuple[int, ...]:
    """(e_0, ..., e_n) for an m-primary monomial ideal I, with e_j paired with m^(n-j)."""
    if not is_m_primary(I):
        raise ValueError("mixed multiplicities need an m-primary ideal")
    return _mixed(I, config)


@lru_cache(maxsize=2048)
def _hilbert_samuel(I: MonomialIdeal, config: RegimeConfig) -> int:
    n = I.dim
    w = config.extent
    for start in _starts(I, config):
        L = length_grid(I, start + w - 1 + n, 0)
        seen = {_mixed_difference(L, start + a, 0, n, 0) for a in range(w)}
        if len(seen) == 1:
            return seen.pop()
    raise AssertionError("unreachable")


def hilbert_samuel(I: MonomialIdeal, config: RegimeConfig = RegimeConfig()) -> int:
    """e(I): the n-th difference of t -> length(R / I^t) once it is constant."""
    if not is_m_primary(I):
        raise ValueError("multiplicity needs an m-primary ideal")
    if I.dim == 0:
        return 0
    return _hilbert_samuel(I, config)


def sigma(I: MonomialIdeal, j: int, config: RegimeConfig = RegimeConfig()) -> int | float:
    """sigma_j(I): e_j of I for m-primary I; otherwise the stable value of e_j(I + m^t)."""
    n = I.dim
    if not 0 <= j <= n:
        raise ValueError(f"index {j} outside 0..{n}")
    if I.is_zero():
        raise ValueError("sigma of the zero ideal is undefined")
    if j == 0:
        return 1
    if is_m_primary(I):
        return mixed_multiplicities(I, config)[j]
    if j > codimension(I):
        return inf
    t = max(max(sum(g) for g in I.gens), 1)
    previous = None
    while True:
        value = mixed_multiplicities(I + max_ideal_power(n, t), config)[j]
        if value == previous:
            return value
        previous = value
        t *= 2


def sigma_sequence(I: MonomialIdeal, config: RegimeConfig = RegimeConfig()) -> tuple[int | float, ...]:
    return tuple(sigma(I, j, config) for j in range(I.dim + 1))


@dataclass(frozen=True)
class MinkowskiReport:
    ok: bool
    failing_index: int | None = None


def minkowski_check(seq: Sequence[int | float]) -> MinkowskiReport:
    """e_j^2 <= e_{j-1} e_{j+1} for every interior j; infinite entries follow the usual order."""
    for j in range(1, len(seq) - 1):
        lo, mid, hi = seq[j - 1], seq[j], seq[j + 1]
        if inf in (lo, mid, hi):
            if mid == inf and hi != inf:
                return MinkowskiReport(False, j)
            continue
        if mid * mid > lo * hi:
            return MinkowskiReport(False, j)
    return MinkowskiReport(True)
