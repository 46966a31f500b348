"""Deterministic random ideals shared by the unit and acceptance suites."""
from __future__ import annotations

import random

from hypothesis import strategies as st

from singthresh.monomials import MonomialIdeal, unit_vector


def _composition(rng: random.Random, total: int, n: int) -> tuple[int, ...]:
    cuts = sorted(rng.randint(0, total) for _ in range(n - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [total])]
    return tuple(parts)


def random_mprimary(rng: random.Random, n: int, max_deg: int, extra: int = 4) -> MonomialIdeal:
    gens = [unit_vector(n, i, rng.randint(1, max_deg)) for i in range(n)]
    for _ in range(rng.randint(0, extra)):
        gens.append(_composition(rng, rng.randint(1, max_deg), n))
    return MonomialIdeal(n, tuple(gens))


def bound_corpus(count: int = 200, seed: int = 20261016) -> list[MonomialIdeal]:
    rng = random.Random(seed)
    return [random_mprimary(rng, rng.randint(1, 3), 7) for _ in range(count)]


@st.composite
def mprimary_ideals(draw, min_n: int = 1, max_n: int = 3, max_deg: int = 6, max_extra: int = 4):
    n = draw(st.integers(min_n, max_n))
    gens = [unit_vector(n, i, draw(st.integers(1, max_deg))) for i in range(n)]
    vec = st.lists(st.integers(0, max_deg), min_size=n, max_size=n).filter(lambda v: 0 < sum(v) <= max_deg)
    gens += draw(st.lists(vec, max_size=max_extra))
    return MonomialIdeal(n, tuple(tuple(g) for g in gens))


@st.composite
def monomial_ideals(draw, min_n: int = 1, max_n: int = 3, max_deg: int = 5, max_gens: int = 5):
    """Arbitrary nonzero monomial ideals, not necessarily m-primary."""
    n = draw(st.integers(min_n, max_n))
    vec = st.lists(st.integers(0, max_deg), min_size=n, max_size=n)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal(n, tuple(tuple(g) for g in gens))


def random_degeneration_input(rng: random.Random, max_r: int = 5, max_size: int = 8):
    """A DegenerationInput satisfying hypotheses (1)-(4), or None when the draw missed."""
    from singthresh.degeneration import DegenerationInput, validate_input

    r = rng.randint(3, max_r)
    d = sorted(rng.sample(range(1, 4 * r), r))
    S: dict[int, set] = {}
    for _ in range(rng.randint(1, max_size)):
        i = rng.randint(2, r - 1)
        u = _composition(rng, d[i - 1], r)
        if u[0] == 0:
            # bias toward (x_1) so hypothesis (2) usually holds
            u = (1,) + u[1:]
            k = max(range(1, r), key=lambda j: u[j])
            if u[k] == 0:
                continue
            u = tuple(a - 1 if j == k else a for j, a in enumerate(u))
        S.setdefault(i, set()).add(u)
    inp = DegenerationInput(d, {i: sorted(v) for i, v in S.items()})
    return None if validate_input(inp) else inp


def degeneration_corpus(count: int = 100, seed: int = 5):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        inp = random_degeneration_input(rng)
        if inp is not None:
            out.append(inp)
    return out
