from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from singthresh.lp import solve_lp


def test_small_optimum():
    # min -x - y  s.t.  x + 2y + s1 = 4, 3x + y + s2 = 6
    r = solve_lp([-1, -1, 0, 0], [[1, 2, 1, 0], [3, 1, 0, 1]], [4, 6])
    assert r.status == "optimal"
    assert r.value == Fraction(-14, 5)
    assert r.x[:2] == [Fraction(8, 5), Fraction(6, 5)]


def test_infeasible_and_unbounded():
    assert solve_lp([0, 0], [[1, 1]], [-1]).status == "infeasible"
    assert solve_lp([-1, 0], [[1, -1]], [1]).status == "unbounded"


def test_redundant_rows_and_fractions():
    r = solve_lp([1, 1], [[1, 1], [2, 2], [Fraction(1, 2), Fraction(1, 2)]], [3, 6, Fraction(3, 2)])
    assert r.status == "optimal" and r.value == 3


def test_degenerate_problem_terminates():
    # Beale's cycling example in equality form
    c = [Fraction(-3, 4), 150, Fraction(-1, 50), 6, 0, 0, 0]
    A = [[Fraction(1, 4), -60, Fraction(-1, 25), 9, 1, 0, 0],
         [Fraction(1, 2), -90, Fraction(-1, 50), 3, 0, 1, 0],
         [0, 0, 1, 0, 0, 0, 1]]
    r = solve_lp(c, A, [0, 0, 1])
    assert r.status == "optimal" and r.value == Fraction(-1, 20)


@st.composite
def bounded_programs(draw):
    m = draw(st.integers(1, 3))
    n = draw(st.integers(1, 4))
    entry = st.integers(-4, 6)
    A = [[draw(entry) for _ in range(n)] for _ in range(m)]
    b = [draw(st.integers(0, 10)) for _ in range(m)]
    c = [draw(entry) for _ in range(n)]
    return c, A, b


@given(bounded_programs())
@settings(max_examples=150, deadline=None)
def test_inequality_programs_match_scipy(prog):
    c, A, b = prog
    m, n = len(A), len(c)
    # A x <= b, 0 <= x <= 5 via slacks, so every program is bounded
    rows = [row + [1 if k == i else 0 for k in range(m + n)] for i, row in enumerate(A)]
    rows += [[1 if k == j else 0 for k in range(n)] + [1 if k == m + j else 0 for k in range(m + n)] for j in range(n)]
    rhs = b + [5] * n
    ours = solve_lp(c + [0] * (m + n), rows, rhs)
    ref = linprog(c, A_ub=A, b_ub=b, bounds=[(0, 5)] * n, method="highs")
    assert ref.status == 0 and ours.status == "optimal"
    assert abs(float(ours.value) - ref.fun) < 1e-7
    x = np.array([float(v) for v in ours.x[:n]])
    assert np.all(np.array(A) @ x <= np.array(b) + 1e-9)


def test_rejects_ragged_input():
    with pytest.raises(ValueError):
        solve_lp([1, 1], [[1]], [1])
