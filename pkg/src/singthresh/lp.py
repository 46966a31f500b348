"""Exact two-phase simplex over the rationals with Bland's anti-cycling rule.

The tableau is kept fraction-free: every entry is an integer and the true
tableau is the stored one divided by the running pivot product `d`
(integer-preserving pivoting, all divisions exact).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

Number = int | Fraction


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: list[Fraction] | None = None
    value: Fraction | None = None


class _Tableau:
    def __init__(self, rows: list[list[int]], obj: list[int], basis: list[int]):
        self.rows = rows
        self.obj = obj
        self.basis = basis
        self.d = 1

    def pivot(self, r: int, c: int) -> None:
        d = self.d
        prow = self.rows[r]
        p = prow[c]
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[c]
                self.rows[i] = [(p * a - f * b) // d for a, b in zip(row, prow)]
        f = self.obj[c]
        self.obj = [(p * a - f * b) // d for a, b in zip(self.obj, prow)]
        self.d = p
        self.basis[r] = c

    def run(self, allowed: int) -> bool:
        """Minimise over the first `allowed` columns; False when unbounded."""
        while True:
            s = 1 if self.d > 0 else -1
            obj = self.obj
            entering = next((j for j in range(allowed) if obj[j] * s < 0), None)
            if entering is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a * s > 0:
                    ratio = Fraction(row[-1], a)
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], entering)

    def solution(self, n: int) -> list[Fraction]:
        x = [Fraction(0)] * n
        for i, j in enumerate(self.basis):
            if j < n:
                x[j] = Fraction(self.rows[i][-1], self.d)
        return x


def _integer_row(values: Sequence[Number]) -> tuple[list[int], int]:
    vals = [Fraction(v) for v in values]
    scale = lcm(*(v.denominator for v in vals)) if vals else 1
    return [int(v * scale) for v in vals], scale


def solve_lp(c: Sequence[Number], A: Sequence[Sequence[Number]], b: Sequence[Number],
             phase_one_only: bool = False) -> LPResult:
    """Minimise c.x subject to A x = b and x >= 0, exactly."""
    m, n = len(A), len(c)
    rows: list[list[int]] = []
    for i in range(m):
        if len(A[i]) != n:
            raise ValueError("constraint row has the wrong length")
        row, _ = _integer_row(list(A[i]) + [b[i]])
        if row[-1] < 0:
            row = [-v for v in row]
        rows.append(row[:n] + [1 if k == i else 0 for k in range(m)] + [row[-1]])

    # phase one: minimise the sum of artificials
    obj = [0] * (n + m + 1)
    for row in rows:
        for j in range(n):
            obj[j] -= row[j]
        obj[-1] -= row[-1]
    tab = _Tableau(rows, obj, [n + i for i in range(m)])
    tab.run(n)
    if tab.obj[-1] != 0:
        return LPResult("infeasible")

    # drive artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= n:
            col = next((j for j in range(n) if tab.rows[i][j] != 0), None)
            if col is None:
                del tab.rows[i]
                del tab.basis[i]
                continue
            tab.pivot(i, col)
        i += 1

    if phase_one_only:
        return LPResult("optimal", tab.solution(n), Fraction(0))

    cost, cscale = _integer_row(c)
    d = tab.d
    obj = [d * v for v in cost] + [0] * m + [0]
    for i, j in enumerate(tab.basis):
        f = cost[j] if j < n else 0
        if f:
            obj = [a - f * r for a, r in zip(obj, tab.rows[i])]
    tab.obj = obj
    if not tab.run(n):
        return LPResult("unbounded")
    value = Fraction(-tab.obj[-1], tab.d) / cscale
    return LPResult("optimal", tab.solution(n), value)
