"""Monomial ideals in k[x_1, ..., x_n] stored as antichains of exponent vectors.

The zero ideal has no generators.  The unit ideal is generated by the zero
vector.  Variable indices are 0-based throughout the library.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

import numpy as np

Exponent = tuple[int, ...]


class DimensionMismatch(ValueError):
    pass


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _antichain(vectors: Iterable[Exponent]) -> tuple[Exponent, ...]:
    # sorting by total degree puts every divisor before its multiples
    ordered = sorted(set(vectors), key=lambda v: (sum(v), v))
    if len(ordered) > 256 and max(max(v, default=0) for v in ordered) < 2**62:
        return _antichain_numpy(ordered)
    kept: list[Exponent] = []
    for v in ordered:
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return tuple(sorted(kept))


def _antichain_numpy(ordered: list[Exponent]) -> tuple[Exponent, ...]:
    arr = np.array(ordered, dtype=np.int64)
    kept = np.empty_like(arr)
    count = 0
    for row in arr:
        if count and np.any(np.all(kept[:count] <= row, axis=1)):
            continue
        kept[count] = row
        count += 1
    return tuple(sorted(tuple(int(x) for x in row) for row in kept[:count]))


@dataclass(frozen=True)
class MonomialIdeal:
    dim: int
    gens: tuple[Exponent, ...]

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")
        vecs = []
        for g in self.gens:
            g = tuple(int(x) for x in g)
            if len(g) != self.dim:
                raise DimensionMismatch(f"exponent {g} is not of length {self.dim}")
            if any(x < 0 for x in g):
                raise ValueError(f"negative exponent in {g}")
            vecs.append(g)
        object.__setattr__(self, "gens", _antichain(vecs))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return (0,) * self.dim in self.gens

    def __contains__(self, u: Sequence[int]) -> bool:
        return contains_monomial(self, u)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return add(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return multiply(self, other)

    def __pow__(self, t: int) -> MonomialIdeal:
        return power(self, t)

    def __str__(self) -> str:
        return format_ideal(self)


def minimalize(dim: int, vectors: Iterable[Sequence[int]]) -> MonomialIdeal:
    return MonomialIdeal(dim, tuple(tuple(v) for v in vectors))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ((0,) * n,))


def unit_vector(n: int, i: int, scale: int = 1) -> Exponent:
    return tuple(scale if j == i else 0 for j in range(n))


def max_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(unit_vector(n, i) for i in range(n)))


def max_ideal_power(n: int, d: int) -> MonomialIdeal:
    """Generated by every monomial of total degree d."""
    if d <= 0:
        return unit_ideal(n)
    gens = []
    for combo in combinations_with_replacement(range(n), d):
        v = [0] * n
        for i in combo:
            v[i] += 1
        gens.append(tuple(v))
    return MonomialIdeal(n, tuple(gens))


def _check_dims(*ideals: MonomialIdeal) -> int:
    dims = {I.dim for I in ideals}
    if len(dims) != 1:
        raise DimensionMismatch(f"ideals live in rings of different dimension: {sorted(dims)}")
    return dims.pop()


def add(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _check_dims(I, J)
    return MonomialIdeal(n, I.gens + J.gens)


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _check_dims(I, J)
    return MonomialIdeal(n, tuple(
        tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in J.gens))


def power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    if t < 0:
        raise ValueError("negative power")
    result = unit_ideal(I.dim)
    base = I
    while t:
        if t & 1:
            result = multiply(result, base)
        t >>= 1
        if t:
            base = multiply(base, base)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _check_dims(I, J)
    return MonomialIdeal(n, tuple(
        tuple(max(a, b) for a, b in zip(g, h)) for g in I.gens for h in J.gens))


def contains_monomial(I: MonomialIdeal, u: Sequence[int]) -> bool:
    if len(u) != I.dim:
        raise DimensionMismatch(f"monomial {tuple(u)} is not in a ring of dimension {I.dim}")
    return any(divides(g, u) for g in I.gens)


def ideal_contains(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True when J is a subset of I."""
    _check_dims(I, J)
    return all(contains_monomial(I, h) for h in J.gens)


def colon_monomial(I: MonomialIdeal, g: Sequence[int]) -> MonomialIdeal:
    return MonomialIdeal(I.dim, tuple(
        tuple(max(a - b, 0) for a, b in zip(h, g)) for h in I.gens))


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """The ideal quotient (I : J)."""
    n = _check_dims(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal is the whole ring only formally; refusing")
    result = unit_ideal(n)
    for g in J.gens:
        result = intersect(result, colon_monomial(I, g))
        if result.is_zero():
            break
    return result


def frobenius_power(J: MonomialIdeal | int, q: int) -> MonomialIdeal:
    """J^[q]; an integer argument n stands for the maximal ideal of k[x_1..x_n]."""
    if q < 1:
        raise ValueError("q must be positive")
    if isinstance(J, int):
        J = max_ideal(J)
    return MonomialIdeal(J.dim, tuple(tuple(q * a for a in g) for g in J.gens))


def pure_powers(I: MonomialIdeal) -> list[int | None]:
    """Smallest a_i with x_i^a_i in I, or None when no power of x_i lies in I."""
    best: list[int | None] = [None] * I.dim
    for g in I.gens:
        support = [i for i, a in enumerate(g) if a]
        if len(support) == 1:
            i = support[0]
            if best[i] is None or g[i] < best[i]:
                best[i] = g[i]
        elif not support:
            return [0] * I.dim
    return best


def is_m_primary(I: MonomialIdeal) -> bool:
    return not I.is_unit() and all(a is not None for a in pure_powers(I))


def order(I: MonomialIdeal) -> int:
    """Smallest total degree of a generator."""
    if I.is_zero():
        raise ValueError("the zero ideal has no order")
    return min(sum(g) for g in I.gens)


def length_quotient(I: MonomialIdeal) -> int:
    """Number of monomials outside an m-primary monomial ideal."""
    if I.is_unit():
        return 0
    box = pure_powers(I)
    if any(b is None for b in box):
        raise ValueError("length of R/I is infinite: ideal is not m-primary")
    inside = np.zeros(tuple(box), dtype=bool)
    for g in I.gens:
        inside[tuple(slice(a, None) for a in g)] = True
    return int(inside.size - np.count_nonzero(inside))


def codimension(I: MonomialIdeal) -> int:
    """Height of I: the fewest variables meeting the support of every generator."""
    if I.is_zero():
        raise ValueError("the zero ideal has codimension 0 only in a degenerate sense; refusing")
    if I.is_unit():
        raise ValueError("the unit ideal has no codimension")
    supports = [frozenset(i for i, a in enumerate(g) if a) for g in I.gens]
    for size in range(1, I.dim + 1):
        for chosen in combinations(range(I.dim), size):
            hit = frozenset(chosen)
            if all(s & hit for s in supports):
                return size
    raise AssertionError("unreachable for a proper nonzero ideal")


def restrict_coordinate(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """Image of I in k[x_1..x_n]/(x_k), written in the remaining n-1 variables."""
    if not 0 <= k < I.dim:
        raise IndexError(f"variable index {k} out of range for dimension {I.dim}")
    return MonomialIdeal(I.dim - 1, tuple(
        g[:k] + g[k + 1:] for g in I.gens if g[k] == 0))


def permute(I: MonomialIdeal, perm: Sequence[int]) -> MonomialIdeal:
    """Send variable i to variable perm[i]."""
    if sorted(perm) != list(range(I.dim)):
        raise ValueError("not a permutation")
    gens = []
    for g in I.gens:
        v = [0] * I.dim
        for i, a in enumerate(g):
            v[perm[i]] = a
        gens.append(tuple(v))
    return MonomialIdeal(I.dim, tuple(gens))


DEFAULT_NAMES = ("x", "y", "z", "w")


def variable_names(n: int) -> list[str]:
    if n <= len(DEFAULT_NAMES):
        return list(DEFAULT_NAMES[:n])
    return [f"x{i + 1}" for i in range(n)]


def format_monomial(u: Sequence[int], names: Sequence[str] | None = None) -> str:
    names = names or variable_names(len(u))
    parts = []
    for name, a in zip(names, u):
        if a == 1:
            parts.append(name)
        elif a:
            parts.append(f"{name}^{a}")
    return "*".join(parts) or "1"


def format_ideal(I: MonomialIdeal, names: Sequence[str] | None = None) -> str:
    if I.is_zero():
        return "(0)"
    return "(" + ", ".join(format_monomial(g, names) for g in I.gens) + ")"
