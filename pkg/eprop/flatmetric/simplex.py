# -*- coding: utf-8 -*-
"""Dense exchange-tableau simplex with Bland's anti-cycling rule.

Solves ``max c.x  s.t.  A x <= b, x >= 0`` for ``b >= 0``, so the slack
basis is feasible and no phase one is needed. The tableau keeps one column
per nonbasic variable (``m x n``) rather than ``m x (n + m)``.
"""
import torch

from eprop.utils.logging import logger

PIVOT_EPS = 1e-12


class SimplexCyclingError(RuntimeError):
    """Pivot budget exhausted; carries a dump of the problem."""

    def __init__(self, message, dump):
        super(SimplexCyclingError, self).__init__(message)
        self.dump = dump


class SimplexTableau(object):
    """Dictionary ``x_B = b - A x_N``, ``z = z0 + c . x_N``.

    Args:
        c (torch.Tensor): ``(n,)`` objective.
        A (torch.Tensor): ``(m, n)`` constraint matrix.
        b (torch.Tensor): ``(m,)`` nonnegative right-hand side.
    """

    def __init__(self, c, A, b):
        if (b < 0).any():
            raise ValueError("right-hand side must be nonnegative")
        self.m, self.n = A.size()
        self.A = A.clone().to(torch.float64)
        self.b = b.clone().to(torch.float64)
        self.c = c.clone().to(torch.float64)
        self.z0 = 0.0
        # labels 0..n-1 are the decision variables, n..n+m-1 the slacks
        self.nonbasic = list(range(self.n))
        self.basic = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def entering(self):
        """Smallest-label nonbasic column with positive reduced cost."""
        best = None
        for j in (self.c > PIVOT_EPS).nonzero().view(-1).tolist():
            if best is None or self.nonbasic[j] < self.nonbasic[best]:
                best = j
        return best

    def leaving(self, j):
        """Min-ratio row, ties broken by smallest basic label."""
        col = self.A[:, j]
        rows = (col > PIVOT_EPS).nonzero().view(-1)
        if rows.numel() == 0:
            return None
        ratios = self.b[rows] / col[rows]
        low = ratios.min().item()
        ties = rows[ratios <= low + PIVOT_EPS].tolist()
        return min(ties, key=lambda i: self.basic[i])

    def pivot(self, r, s):
        p = self.A[r, s].item()
        pivot_row = self.A[r].clone()
        col = self.A[:, s].clone()
        b_r = self.b[r].item() / p

        self.A -= torch.outer(col, pivot_row) / p
        self.A[:, s] = -col / p
        self.b -= col * b_r
        self.A[r] = pivot_row / p
        self.A[r, s] = 1.0 / p
        self.b[r] = b_r

        c_s = self.c[s].item()
        self.z0 += c_s * b_r
        self.c -= c_s * pivot_row / p
        self.c[s] = -c_s / p

        self.nonbasic[s], self.basic[r] = self.basic[r], self.nonbasic[s]
        self.pivots += 1

    def solution(self):
        x = torch.zeros(self.n, dtype=torch.float64)
        for i, label in enumerate(self.basic):
            if label < self.n:
                x[label] = self.b[i]
        return x

    def dump(self):
        return {"A": self.A.tolist(), "b": self.b.tolist(),
                "c": self.c.tolist(), "basic": list(self.basic),
                "nonbasic": list(self.nonbasic), "pivots": self.pivots}


def simplex_max(c, A, b, max_pivots=None):
    """Maximize ``c.x`` over ``{A x <= b, x >= 0}`` with ``b >= 0``.

    Returns:
        (float, torch.Tensor):

        * optimum: the optimal objective value.
        * x: an optimal basic solution ``(n,)``.

    Raises:
        ValueError: the problem is unbounded.
        SimplexCyclingError: the pivot budget was exhausted.
    """
    tableau = SimplexTableau(c, A, b)
    if max_pivots is None:
        max_pivots = 50 * (tableau.m + tableau.n) + 100
    while True:
        j = tableau.entering()
        if j is None:
            break
        i = tableau.leaving(j)
        if i is None:
            raise ValueError("linear program is unbounded")
        tableau.pivot(i, j)
        if tableau.pivots > max_pivots:
            raise SimplexCyclingError(
                "simplex exceeded %d pivots" % max_pivots, tableau.dump())
    logger.debug("simplex: %d pivots on a %dx%d tableau"
                 % (tableau.pivots, tableau.m, tableau.n))
    return tableau.z0, tableau.solution()
