"""Newton polyhedra of monomial ideals, kept in vertex form only.

Gamma(I) is the convex hull of the exponent vectors of I plus the positive
orthant.  Every question is answered by an exact linear program.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .lp import solve_lp
from .monomials import Exponent, MonomialIdeal, divides

Number = int | Fraction


@dataclass(frozen=True)
class NewtonPolytope:
    dim: int
    vertices: tuple[Exponent, ...]


def newton_polytope(I: MonomialIdeal) -> NewtonPolytope:
    if I.is_zero():
        raise ValueError("the zero ideal has an empty Newton polyhedron")
    return NewtonPolytope(I.dim, I.gens)


def _vertices(P: NewtonPolytope | MonomialIdeal) -> tuple[int, tuple[Exponent, ...]]:
    if isinstance(P, MonomialIdeal):
        P = newton_polytope(P)
    return P.dim, P.vertices


def member(P: NewtonPolytope | MonomialIdeal, p: Sequence[Number]) -> bool:
    """Decide p in Gamma: find lambda >= 0 summing to 1 with sum lambda_i g_i <= p."""
    n, gens = _vertices(P)
    if len(p) != n:
        raise ValueError("point has the wrong dimension")
    p = [Fraction(x) for x in p]
    if any(divides(g, p) for g in gens):
        return True
    if any(p[j] < min(g[j] for g in gens) for j in range(n)):
        return False
    k = len(gens)
    # columns: lambda_1..lambda_k, slack_1..slack_n
    A = [[g[j] for g in gens] + [1 if i == j else 0 for i in range(n)] for j in range(n)]
    A.append([1] * k + [0] * n)
    b = list(p) + [1]
    return solve_lp([0] * (k + n), A, b, phase_one_only=True).status == "optimal"


def mu(P: NewtonPolytope | MonomialIdeal) -> Fraction:
    """Least t with t*(1,...,1) in Gamma."""
    n, gens = _vertices(P)
    return _mu(n, gens)


@lru_cache(maxsize=4096)
def _mu(n: int, gens: tuple[Exponent, ...]) -> Fraction:
    if n == 0:
        raise ValueError("no diagonal in dimension 0")
    k = len(gens)
    # columns: lambda_1..lambda_k, slack_1..slack_n, t
    A = [[g[j] for g in gens] + [1 if i == j else 0 for i in range(n)] + [-1]
         for j in range(n)]
    A.append([1] * k + [0] * n + [0])
    b = [0] * n + [1]
    c = [0] * (k + n) + [1]
    res = solve_lp(c, A, b)
    if res.status != "optimal":
        raise ArithmeticError(f"diagonal program ended with status {res.status}")
    return res.value


def in_closure(I: MonomialIdeal, u: Sequence[int]) -> bool:
    """Monomial membership in the integral closure of I."""
    if I.is_zero():
        return False
    return member(I, u)


@lru_cache(maxsize=1024)
def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Lattice points of Gamma(I), generated inside the box of generator maxima."""
    if I.is_zero() or I.is_unit():
        return I
    bounds = [max(g[j] for g in I.gens) for j in range(I.dim)]
    found: list[Exponent] = []
    points = sorted(product(*(range(b + 1) for b in bounds)), key=sum)
    for u in points:
        if any(divides(f, u) for f in found):
            continue
        if member(I, u):
            found.append(u)
    return MonomialIdeal(I.dim, tuple(found))


def simplex_region_equals(I: MonomialIdeal, a: Sequence[Number]) -> bool:
    """Gamma(I) == {u >= 0 : sum u_i / a_i >= 1}."""
    if I.is_zero() or len(a) != I.dim:
        return False
    a = [Fraction(x) for x in a]
    if any(x <= 0 for x in a):
        return False
    if any(sum(Fraction(g[i]) / a[i] for i in range(I.dim)) < 1 for g in I.gens):
        return False
    for i in range(I.dim):
        corner = [Fraction(0)] * I.dim
        corner[i] = a[i]
        if not member(I, corner):
            return False
    return True

