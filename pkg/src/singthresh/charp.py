"""Sparse polynomials over F_p and F_p[t], Frobenius-power reduction and F-threshold search."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import BudgetExceeded
from .monomials import Exponent, MonomialIdeal, divides, frobenius_power, is_m_primary

# A coefficient is a polynomial in t over F_p, lowest degree first, no trailing zeros.
Coeff = tuple[int, ...]

DEFAULT_BUDGET = 2_000_000


def coeff(values: int | Sequence[int], p: int) -> Coeff:
    if isinstance(values, int):
        values = (values,)
    c = [v % p for v in values]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _cadd(a: Coeff, b: Coeff, p: int) -> Coeff:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _cmul(a: Coeff, b: Coeff, p: int) -> Coeff:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return coeff(out, p)


@dataclass(frozen=True)
class SparsePolynomial:
    p: int
    dim: int
    terms: tuple[tuple[Exponent, Coeff], ...]

    @classmethod
    def from_terms(cls, p: int, dim: int,
                   terms: Mapping[Sequence[int], int | Sequence[int]] | Iterable) -> SparsePolynomial:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Coeff] = {}
        for u, c in items:
            u = tuple(int(a) for a in u)
            if len(u) != dim or any(a < 0 for a in u):
                raise ValueError(f"bad exponent {u} for dimension {dim}")
            acc[u] = _cadd(acc.get(u, ()), coeff(c, p), p)
        return cls(p, dim, tuple(sorted((u, c) for u, c in acc.items() if c)))

    @classmethod
    def monomial(cls, p: int, u: Sequence[int], c: int | Sequence[int] = 1) -> SparsePolynomial:
        return cls.from_terms(p, len(u), {tuple(u): c})

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Exponent]:
        return [u for u, _ in self.terms]

    def is_parametric(self) -> bool:
        return any(len(c) > 1 for _, c in self.terms)

    def __add__(self, other: SparsePolynomial) -> SparsePolynomial:
        _check(self, other)
        return SparsePolynomial.from_terms(self.p, self.dim, list(self.terms) + list(other.terms))

    def __mul__(self, other: SparsePolynomial) -> SparsePolynomial:
        return poly_mul(self, other)

    def __pow__(self, m: int) -> SparsePolynomial:
        return poly_pow(self, m)

    def __str__(self) -> str:
        return format_poly(self)


def _check(f: SparsePolynomial, g: SparsePolynomial) -> None:
    if f.p != g.p:
        raise ValueError(f"characteristic mismatch: {f.p} vs {g.p}")
    if f.dim != g.dim:
        raise ValueError(f"dimension mismatch: {f.dim} vs {g.dim}")


def poly_mul(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    _check(f, g)
    p = f.p
    acc: dict[Exponent, Coeff] = {}
    for u, a in f.terms:
        for v, b in g.terms:
            w = tuple(x + y for x, y in zip(u, v))
            acc[w] = _cadd(acc.get(w, ()), _cmul(a, b, p), p)
    return SparsePolynomial(p, f.dim, tuple(sorted((w, c) for w, c in acc.items() if c)))


def poly_pow(f: SparsePolynomial, m: int) -> SparsePolynomial:
    if m < 0:
        raise ValueError("negative exponent")
    result = SparsePolynomial.monomial(f.p, (0,) * f.dim)
    base = f
    while m:
        if m & 1:
            result = poly_mul(result, base)
        m >>= 1
        if m:
            base = poly_mul(base, base)
    return result


def reduce_mod_frobenius(f: SparsePolynomial, J: MonomialIdeal, q: int) -> SparsePolynomial:
    """Drop the terms lying in J^[q]; the result is zero exactly when f is in J^[q]."""
    if J.dim != f.dim:
        raise ValueError("dimension mismatch")
    Jq = frobenius_power(J, q).gens
    kept = tuple((u, c) for u, c in f.terms if not any(divides(g, u) for g in Jq))
    return SparsePolynomial(f.p, f.dim, kept)


def nu_poly(gens: Sequence[SparsePolynomial], J: MonomialIdeal, p: int, e: int,
            budget: int = DEFAULT_BUDGET) -> int:
    """Largest t with (gens)^t outside J^[p^e], by layered search over reduced products."""
    if not gens:
        raise ValueError("need at least one generator")
    if any(g.is_zero() for g in gens):
        raise ValueError("generators must be nonzero")
    if any(g.p != p for g in gens):
        raise ValueError("generator characteristic differs from p")
    if not is_m_primary(J):
        raise ValueError("J must be m-primary")
    q = p**e
    Jq = frobenius_power(J, q).gens

    def reduce(f: SparsePolynomial) -> SparsePolynomial:
        return SparsePolynomial(p, f.dim, tuple(
            (u, c) for u, c in f.terms if not any(divides(g, u) for g in Jq)))

    reduced_gens = [reduce(g) for g in gens]
    layer = {SparsePolynomial.monomial(p, (0,) * J.dim)}
    t = 0
    seen = 0
    while True:
        nxt: set[SparsePolynomial] = set()
        for state in sorted(layer, key=lambda s: s.terms):
            for g in reduced_gens:
                if g.is_zero():
                    continue
                prod = reduce(poly_mul(state, g))
                if not prod.is_zero():
                    nxt.add(prod)
        if not nxt:
            return t
        seen += len(nxt)
        if seen > budget:
            raise BudgetExceeded(f"{seen} states exceed the budget {budget}", partial=t + 1)
        layer = nxt
        t += 1


@dataclass(frozen=True)
class IntegerWeight:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int]):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    def __call__(self, u: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(self.coeffs, u))


def initial_form(f: SparsePolynomial, weight: IntegerWeight | Sequence[int]) -> SparsePolynomial:
    """Sum of the terms of f on which the weight is largest."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no initial form")
    if not isinstance(weight, IntegerWeight):
        weight = IntegerWeight(weight)
    if len(weight.coeffs) != f.dim:
        raise ValueError("weight has the wrong length")
    top = max(weight(u) for u, _ in f.terms)
    return SparsePolynomial(f.p, f.dim, tuple((u, c) for u, c in f.terms if weight(u) == top))


def _format_coeff(c: Coeff) -> str:
    parts = []
    for k, v in enumerate(c):
        if not v:
            continue
        if k == 0:
            parts.append(str(v))
        else:
            tp = "t" if k == 1 else f"t^{k}"
            parts.append(tp if v == 1 else f"{v}*{tp}")
    return "+".join(parts)


def format_poly(f: SparsePolynomial, names: Sequence[str] | None = None) -> str:
    from .monomials import format_monomial

    if f.is_zero():
        return "0"
    out = []
    for u, c in sorted(f.terms, key=lambda uc: (-sum(uc[0]), tuple(-a for a in uc[0]))):
        mono = format_monomial(u, names)
        if c == (1,):
            out.append(mono)
        else:
            cs = _format_coeff(c)
            if len([v for v in c if v]) > 1:
                cs = f"({cs})"
            out.append(cs if mono == "1" else f"{cs}*{mono}")
    return " + ".join(out)
