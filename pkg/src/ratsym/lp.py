"""Exact two-phase simplex over ``Fraction`` with Bland's rule.

Solves ``min c.x  s.t.  A x >= b,  x >= 0``. No tolerances: every pivot is
exact, and Bland's smallest-index rule guarantees termination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows  # list of lists of Fraction
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, c: int):
        piv = self.rows[r][c]
        row = [v / piv for v in self.rows[r]]
        self.rows[r] = row
        self.rhs[r] /= piv
        for k, other in enumerate(self.rows):
            if k != r and other[c] != 0:
                f = other[c]
                self.rows[k] = [a - f * b for a, b in zip(other, row)]
                self.rhs[k] -= f * self.rhs[r]
        self.basis[r] = c

    def reduced_costs(self, cost):
        red = list(cost)
        for r, j in enumerate(self.basis):
            cj = cost[j]
            if cj:
                red = [a - cj * b for a, b in zip(red, self.rows[r])]
        return red

    def optimize(self, cost, allowed):
        """Minimize ``cost`` over the current basis; returns False if unbounded."""
        while True:
            red = self.reduced_costs(cost)
            entering = next((j for j in allowed if red[j] < 0), None)
            if entering is None:
                return True
            best = None
            for r, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[r] / a
                    key = (ratio, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return False
            self.pivot(best[1], entering)


def solve_lp(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Minimize ``c.x`` subject to ``A x >= b`` and ``x >= 0``."""
    n = len(c)
    m = len(A)
    c = [Fraction(v) for v in c]
    if m == 0:
        if any(v < 0 for v in c):
            return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, Fraction(0), (Fraction(0),) * n)
    # columns: x (n), surplus (m), artificial (m)
    width = n + 2 * m
    rows, rhs = [], []
    for i, (arow, bi) in enumerate(zip(A, b)):
        if len(arow) != n:
            raise ValueError("constraint row has wrong length")
        row = [Fraction(v) for v in arow] + [Fraction(0)] * (2 * m)
        row[n + i] = Fraction(-1)
        bi = Fraction(bi)
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        row[n + m + i] = Fraction(1)
        rows.append(row)
        rhs.append(bi)
    tab = _Tableau(rows, rhs, [n + m + i for i in range(m)])

    phase1 = [Fraction(0)] * (n + m) + [Fraction(1)] * m
    tab.optimize(phase1, range(width))
    if sum(tab.rhs[r] for r, j in enumerate(tab.basis) if j >= n + m) > 0:
        return LPResult(INFEASIBLE)

    # drive remaining (zero-level) artificials out of the basis
    r = 0
    while r < len(tab.rows):
        if tab.basis[r] >= n + m:
            col = next((j for j in range(n + m) if tab.rows[r][j] != 0), None)
            if col is None:
                # redundant equality row
                del tab.rows[r], tab.rhs[r], tab.basis[r]
                continue
            tab.pivot(r, col)
        r += 1

    phase2 = c + [Fraction(0)] * (2 * m)
    if not tab.optimize(phase2, range(n + m)):
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * width
    for r, j in enumerate(tab.basis):
        x[j] = tab.rhs[r]
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, value, tuple(x[:n]))


def is_feasible(A: Sequence[Sequence], b: Sequence) -> bool:
    n = len(A[0]) if A else 0
    return solve_lp([0] * n, A, b).status != INFEASIBLE
