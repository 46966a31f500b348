"""Weight orders that push a block-graded complete intersection toward a single mixed block.

Degree classes are labelled 1..r as in the block structure; vectors in Z^r are
plain tuples, so class i lives at tuple position i - 1.  The finite set S is
split into classes 2..r-1.  The order is built from rational layers
lambda_0, lambda_1, ..., lambda_s compared lexicographically, then folded into
one integer weight.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence

from .charp import IntegerWeight, SparsePolynomial, initial_form
from .errors import PostconditionFailure

Vector = tuple[int, ...]


@dataclass(frozen=True)
class DegenerationInput:
    d: tuple[int, ...]
    S: Mapping[int, tuple[Vector, ...]]

    def __init__(self, d: Sequence[int], S: Mapping[int, Sequence[Sequence[int]]]):
        object.__setattr__(self, "d", tuple(int(x) for x in d))
        object.__setattr__(self, "S", {int(i): tuple(tuple(int(a) for a in u) for u in vs)
                                       for i, vs in sorted(S.items())})

    @property
    def r(self) -> int:
        return len(self.d)

    def classes(self) -> range:
        return range(2, self.r)

    def members(self, i: int) -> tuple[Vector, ...]:
        return self.S.get(i, ())

    def all_members(self) -> list[tuple[int, Vector]]:
        return [(i, u) for i in self.classes() for u in self.members(i)]

    def corner(self, i: int) -> Vector:
        """d_i b_i."""
        return tuple(self.d[i - 1] if k == i - 1 else 0 for k in range(self.r))


def nu_d(d: Sequence[int], u: Sequence[int]) -> Fraction:
    return sum((Fraction(a, di) for a, di in zip(u, d)), Fraction(0))


def validate_input(inp: DegenerationInput) -> list[str]:
    """Violations of hypotheses (1)-(4); empty when the input is admissible."""
    d, r = inp.d, inp.r
    problems = []
    if r < 3:
        problems.append("need at least three degree classes")
    if any(x <= 0 for x in d) or any(a >= b for a, b in zip(d, d[1:])):
        problems.append("degrees must be positive and strictly increasing")
    for i in inp.S:
        if not 2 <= i <= r - 1:
            problems.append(f"class {i} outside 2..{r - 1}")
    if problems:
        return problems
    for i, u in inp.all_members():
        if len(u) != r or any(a < 0 for a in u):
            problems.append(f"(shape) {u} in S_{i} is not in Z_>=0^{r}")
            continue
        if sum(u) != d[i - 1]:
            problems.append(f"(1) |{u}| = {sum(u)} differs from d_{i} = {d[i - 1]}")
        if u[0] < 1 and nu_d(d, u) < 1:
            problems.append(f"(2) {u} in S_{i} has u_1 = 0 and nu_d < 1")
    for i in inp.classes():
        if inp.corner(i) in inp.members(i):
            problems.append(f"(3) d_{i} b_{i} lies in S_{i}")
    if not any(len(u) == r and nu_d(d, u) < 1 for _, u in inp.all_members()):
        problems.append("(4) no element of S has nu_d < 1")
    return problems


@dataclass(frozen=True)
class RationalWeight:
    coeffs: tuple[Fraction, ...]

    def __call__(self, u: Sequence[int]) -> Fraction:
        return sum((c * a for c, a in zip(self.coeffs, u)), Fraction(0))


@dataclass
class WeightOrder:
    weight: IntegerWeight
    m: int
    layers: list[RationalWeight]
    thresholds: list[Fraction]
    active: list[list[int]] = field(default_factory=list)  # Lambda_1, ..., Lambda_s
    base: int = 0


class InvalidDegenerationInput(ValueError):
    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


def _layer0(inp: DegenerationInput) -> tuple[Fraction, RationalWeight]:
    d = inp.d
    t0 = min((nu_d(d, u) - 1) / u[0] for _, u in inp.all_members() if u[0] >= 1)
    coeffs = [Fraction(-1, x) for x in d]
    coeffs[0] += t0
    return t0, RationalWeight(tuple(coeffs))


def _layer1(inp: DegenerationInput, survivors: dict[int, list[Vector]]) -> tuple[Fraction, RationalWeight]:
    d, r = inp.d, inp.r
    top = d[-1]
    # coefficient of u_k (k >= 2) is -d_r^k
    powers = [top**k for k in range(1, r + 1)]

    def tail(u: Vector) -> int:
        return sum(powers[k] * u[k] for k in range(1, r))

    t1 = min(Fraction(tail(u) - d[i - 1] * powers[i - 1], u[0])
             for i, us in survivors.items() for u in us if u[0] != 0)
    return t1, RationalWeight((t1,) + tuple(Fraction(-p) for p in powers[1:]))


def _layer_k(inp: DegenerationInput, survivors: dict[int, list[Vector]],
             pivot: int) -> tuple[Fraction, RationalWeight]:
    t = max(Fraction(u[pivot - 1], u[0]) for j, us in survivors.items() if j > pivot for u in us)
    coeffs = [Fraction(0)] * inp.r
    coeffs[0] = -t
    coeffs[pivot - 1] += 1
    return t, RationalWeight(tuple(coeffs))


def _refine(inp: DegenerationInput, survivors: dict[int, list[Vector]],
            lam: RationalWeight) -> dict[int, list[Vector]]:
    return {i: [u for u in us if lam(u) == lam(inp.corner(i))] for i, us in survivors.items()}


def _active(survivors: dict[int, list[Vector]]) -> list[int]:
    return sorted(i for i, us in survivors.items() if us)


def layer_violations(inp: DegenerationInput, layers: list[RationalWeight]) -> list[str]:
    """Re-check the displayed properties of every layer on the finite sets S^(k)."""
    d = inp.d
    out = []
    lam0 = layers[0]
    S = {i: list(inp.members(i)) for i in inp.classes()}
    S0 = _refine(inp, S, lam0)
    for i, u in inp.all_members():
        c = lam0(inp.corner(i))
        if lam0(u) > c:
            out.append(f"B.i fails at {u} in S_{i}")
        if lam0(u) == c and nu_d(d, u) > 1:
            out.append(f"B.ii fails at {u} in S_{i}")
        if lam0(u) == c and u[0] >= 1 and nu_d(d, u) >= 1:
            out.append(f"B.iii fails at {u} in S_{i}")
    if not any(u[0] >= 1 for us in S0.values() for u in us):
        out.append("B.iv fails: no survivor with u_1 >= 1")
    if len(layers) < 2:
        return out
    lam1 = layers[1]
    for i, us in S0.items():
        c = lam1(inp.corner(i))
        for u in us:
            if u[0] == 0 and not lam1(u) < c:
                out.append(f"C.i fails at {u} in S_{i}")
            if u[0] >= 1 and lam1(u) > c:
                out.append(f"C.ii fails at {u} in S_{i}")
    S_prev = _refine(inp, S0, lam1)
    if not any(u[0] >= 1 for us in S_prev.values() for u in us):
        out.append("C.iii fails: no survivor with u_1 >= 1")
    for k, lam in enumerate(layers[2:], start=1):
        active = _active(S_prev)
        pivot = active[0]
        for u in S_prev[pivot]:
            if not lam(u) < lam(inp.corner(pivot)):
                out.append(f"D.i fails in layer {k + 1} at {u} in S_{pivot}")
        for j, us in S_prev.items():
            if j > pivot:
                for u in us:
                    if lam(u) > lam(inp.corner(j)):
                        out.append(f"D.ii fails in layer {k + 1} at {u} in S_{j}")
        nxt = _refine(inp, S_prev, lam)
        if not any(nxt[j] for j in nxt if j > pivot):
            out.append(f"D.iii fails in layer {k + 1}")
        S_prev = nxt
    return out


def combine_layers(layers: Sequence[RationalWeight], U: Sequence[Vector]) -> tuple[IntegerWeight, int]:
    """One integer weight reproducing the lexicographic order of the layers on U.

    Each layer is scaled to integer coefficients, then layer k gets the
    factor B^(s-k) with B larger than every layer's spread over U.
    """
    scaled = []
    for lam in layers:
        den = lcm(*(c.denominator for c in lam.coeffs))
        scaled.append(tuple(int(c * den) for c in lam.coeffs))
    spread = 0
    for coeffs in scaled:
        values = [sum(c * a for c, a in zip(coeffs, u)) for u in U]
        spread = max(spread, max(values) - min(values))
    base = spread + 1
    s = len(scaled) - 1
    total = [0] * len(layers[0].coeffs)
    for k, coeffs in enumerate(scaled):
        factor = base ** (s - k)
        for idx, c in enumerate(coeffs):
            total[idx] += factor * c
    return IntegerWeight(total), base


@dataclass(frozen=True)
class Conclusions:
    below_m_corner: bool  # A.i as displayed: lambda(u) < lambda(d_m b_m) for u in S_i, i != m
    below_own_corner: bool  # lambda(u) < lambda(d_i b_i) for u in S_i, i != m
    max_attained: bool  # A.ii
    maximizers_mixed: bool  # A.iii

    @property
    def all_hold(self) -> bool:
        return self.below_m_corner and self.below_own_corner and self.max_attained and self.maximizers_mixed


def check_conclusions(inp: DegenerationInput, weight: IntegerWeight, m: int) -> Conclusions:
    target = weight(inp.corner(m))
    others = [(i, u) for i, u in inp.all_members() if i != m]
    below_m = all(weight(u) < target for _, u in others)
    below_own = all(weight(u) < weight(inp.corner(i)) for i, u in others)
    Sm = inp.members(m)
    top = max((weight(u) for u in Sm), default=None)
    attained = top == target
    mixed = attained and all(u[0] >= 1 and nu_d(inp.d, u) < 1 for u in Sm if weight(u) == top)
    return Conclusions(below_m, below_own, attained, mixed)


def degeneration_order(inp: DegenerationInput, strict: bool = True) -> WeightOrder:
    """Build (lambda, m).  With strict, every conclusion must hold or PostconditionFailure is raised."""
    problems = validate_input(inp)
    if problems:
        raise InvalidDegenerationInput(problems)
    S = {i: list(inp.members(i)) for i in inp.classes()}
    t0, lam0 = _layer0(inp)
    S0 = _refine(inp, S, lam0)
    t1, lam1 = _layer1(inp, S0)
    layers, thresholds = [lam0, lam1], [t0, t1]
    survivors = _refine(inp, S0, lam1)
    active = [_active(survivors)]
    while len(active[-1]) >= 2:
        pivot = active[-1][0]
        t, lam = _layer_k(inp, survivors, pivot)
        layers.append(lam)
        thresholds.append(t)
        survivors = _refine(inp, survivors, lam)
        nxt = _active(survivors)
        if not nxt or len(nxt) >= len(active[-1]):
            raise PostconditionFailure("active classes did not shrink", details={"layer": len(layers) - 1})
        active.append(nxt)
    if len(active[-1]) != 1:
        raise PostconditionFailure("no class survives every layer", details={"layer": len(layers) - 1})
    m = active[-1][0]
    bad = layer_violations(inp, layers)
    if bad:
        raise PostconditionFailure("layer properties fail", details=bad)
    U = [u for _, u in inp.all_members()] + [inp.corner(i) for i in range(1, inp.r + 1)]
    weight, base = combine_layers(layers, U)
    order = WeightOrder(weight, m, layers, thresholds, active, base)
    if strict:
        concl = check_conclusions(inp, weight, m)
        if not concl.all_hold:
            raise PostconditionFailure("weight order conclusions fail", details=concl)
    return order


# Applying the order to block-graded generators


@dataclass
class Degeneration:
    order: WeightOrder
    generators: list[tuple[int, SparsePolynomial]]  # (class label, initial form)
    split: dict[int, list[tuple[SparsePolynomial, SparsePolynomial]]]  # class -> [(f', f'')]


def _collapse(u: Sequence[int], labels: Sequence[int], r: int) -> Vector:
    out = [0] * r
    for a, c in zip(u, labels):
        out[c - 1] += a
    return tuple(out)


def degenerate_ideal(blocks: Sequence[tuple[int, Sequence[SparsePolynomial]]],
                     variable_classes: Sequence[int], strict: bool = True) -> Degeneration:
    """Initial forms of block-graded forms under the weight order pulled back along block collapse.

    blocks[i - 1] = (d_i, forms of degree d_i); variable_classes[v] is the class label of variable v.
    """
    r = len(blocks)
    d = [deg for deg, _ in blocks]
    if sorted(set(variable_classes)) != list(range(1, r + 1)):
        raise ValueError("every class needs at least one variable and labels run 1..r")
    dim = len(variable_classes)

    def weight_d(u: Sequence[int]) -> Fraction:
        return sum((Fraction(a, d[c - 1]) for a, c in zip(u, variable_classes)), Fraction(0))

    def in_first_block(u: Sequence[int]) -> bool:
        return any(a and c == 1 for a, c in zip(u, variable_classes))

    def only_block(u: Sequence[int], i: int) -> bool:
        return all(a == 0 or c == i for a, c in zip(u, variable_classes))

    split: dict[int, list[tuple[SparsePolynomial, SparsePolynomial]]] = {}
    S: dict[int, set[Vector]] = {}
    for i, (deg, forms) in enumerate(blocks, start=1):
        for f in forms:
            if f.dim != dim:
                raise ValueError("form has the wrong number of variables")
            if f.is_zero():
                raise ValueError("zero form")
            for u, _ in f.terms:
                if sum(u) != deg:
                    raise ValueError(f"form in class {i} is not homogeneous of degree {deg}")
                if i == 1 and not only_block(u, 1):
                    raise ValueError("alignment condition fails: the first block is not extended from its own variables")
                if not in_first_block(u) and weight_d(u) < 1:
                    raise ValueError(f"alignment condition fails: term {u} lies outside D + (x_1)")
            pure = SparsePolynomial(f.p, dim, tuple((u, c) for u, c in f.terms if only_block(u, i)))
            mixed = SparsePolynomial(f.p, dim, tuple((u, c) for u, c in f.terms if not only_block(u, i)))
            split.setdefault(i, []).append((pure, mixed))
            if 2 <= i <= r - 1:
                S.setdefault(i, set()).update(_collapse(u, variable_classes, r) for u, _ in mixed.terms)
    inp = DegenerationInput(d, {i: sorted(vs) for i, vs in S.items()})
    order = degeneration_order(inp, strict=strict)
    pulled = IntegerWeight([order.weight.coeffs[c - 1] for c in variable_classes])
    gens = [(i, initial_form(f, pulled)) for i, (_, forms) in enumerate(blocks, start=1) for f in forms]
    result = Degeneration(order, gens, split)
    if strict:
        problems = degeneration_violations(result, d, variable_classes)
        if problems:
            raise PostconditionFailure("degenerated generators fail their conclusions", details=problems)
    return result


def degeneration_violations(result: Degeneration, d: Sequence[int],
                            variable_classes: Sequence[int]) -> list[str]:
    """Check that class-m initial forms split as h' + h'' with h'' in (x_1) below weight 1, some h'' nonzero."""
    m = result.order.m
    out = []
    any_mixed = False
    for i, h in result.generators:
        if i != m:
            continue
        for u, _ in h.terms:
            if all(a == 0 or c == m for a, c in zip(u, variable_classes)):
                continue
            any_mixed = True
            if not any(a and c == 1 for a, c in zip(u, variable_classes)):
                out.append(f"mixed term {u} is not in (x_1)")
            w = sum((Fraction(a, d[c - 1]) for a, c in zip(u, variable_classes)), Fraction(0))
            if w >= 1:
                out.append(f"mixed term {u} has weight {w} >= 1")
    if not any_mixed:
        out.append(f"no initial form in class {m} keeps a mixed term")
    return out
