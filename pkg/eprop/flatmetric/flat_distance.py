# -*- coding: utf-8 -*-
"""Exact Fortet-Mourier (flat, bounded-Lipschitz) distance.

``||mu - nu||_FM = sup { |sum_i c_i f_i| : |f_i| <= 1, |f_i - f_j| <= d_ij }``
over the union support, solved as a linear program. Any such ``f`` on the
support extends to the whole space (McShane extension, then clipping to
``[-1, 1]``), so the finite LP is exact.
"""
import torch

from eprop.flatmetric.simplex import simplex_max
from eprop.utils.misc import double_tensor

# Pairs at least this far apart only repeat the box constraint.
LIPSCHITZ_PRUNE = 2.0
# Slack when testing d(i, m) + d(m, j) <= d(i, j).
GEODESIC_TOL = 1e-12
# Largest support for the cubic geodesic test.
GEODESIC_MAX_POINTS = 400


class FlatMetricProblem(object):
    """LP data on the union support.

    Args:
        points (list[int]): state ids carrying a nonzero coefficient.
        distances (torch.Tensor): ``(k, k)`` pairwise distances of points.
        coefficients (torch.Tensor): ``(k,)`` signed weights ``mu - nu``.
    """

    def __init__(self, points, distances, coefficients):
        self.points = list(points)
        self.distances = distances
        self.coefficients = coefficients

    @classmethod
    def from_measures(cls, mu, nu, model):
        mu_w = mu.as_dict()
        nu_w = nu.as_dict()
        points = []
        coefs = []
        for s in sorted(set(mu_w) | set(nu_w)):
            c = mu_w.get(s, 0) - nu_w.get(s, 0)
            if c != 0:
                points.append(s)
                coefs.append(c)
        # f -> -f leaves the value unchanged; fixing the sign of the first
        # coefficient makes the problem identical for (mu, nu) and (nu, mu)
        if coefs and coefs[0] < 0:
            coefs = [-c for c in coefs]
        if points:
            index = torch.tensor(points, dtype=torch.long)
            distances = model.distance_matrix()[index][:, index]
        else:
            distances = torch.zeros(0, 0, dtype=torch.float64)
        return cls(points, distances, double_tensor(coefs))

    def constraints(self):
        """Build ``A g <= b`` for the shifted variables ``g = f + 1``.

        Returns:
            (torch.Tensor, torch.Tensor): ``A`` ``(m, k)`` and ``b`` ``(m,)``.
        """
        k = len(self.points)
        rows = [torch.eye(k, dtype=torch.float64)]
        rhs = [torch.full((k,), 2.0, dtype=torch.float64)]
        if k > 1:
            i, j = torch.triu_indices(k, k, offset=1)
            d = self.distances[i, j]
            keep = d < LIPSCHITZ_PRUNE
            if k <= GEODESIC_MAX_POINTS:
                keep &= ~geodesic_pairs(self.distances)[i, j]
            i, j, d = i[keep], j[keep], d[keep]
            pairs = i.numel()
            if pairs:
                lip = torch.zeros(2 * pairs, k, dtype=torch.float64)
                ar = torch.arange(pairs)
                lip[ar, i] = 1.0
                lip[ar, j] = -1.0
                lip[pairs + ar, i] = -1.0
                lip[pairs + ar, j] = 1.0
                rows.append(lip)
                rhs.append(torch.cat([d, d]))
        return torch.cat(rows), torch.cat(rhs)

    def dump(self):
        return {"points": self.points,
                "distances": self.distances.tolist(),
                "coefficients": self.coefficients.tolist()}


def geodesic_pairs(distances):
    """``(k, k)`` mask of pairs with a third point ``m`` on a geodesic,
    ``d(i, m) + d(m, j) = d(i, j)``.

    Their Lipschitz constraint follows from those of ``(i, m)`` and
    ``(m, j)``, so dropping it leaves the program unchanged.
    """
    k = distances.size(0)
    # via[i, m, j] = d(i, m) + d(m, j)
    via = distances.unsqueeze(2) + distances.unsqueeze(0)
    eye = torch.eye(k, dtype=torch.bool)
    via = via.masked_fill(eye.unsqueeze(2), float("inf"))
    via = via.masked_fill(eye.unsqueeze(0), float("inf"))
    return (via <= distances.unsqueeze(1) + GEODESIC_TOL).any(1)


def solve_lp(problem):
    """Maximize ``c.f`` over the box and Lipschitz constraints.

    Returns:
        (float, torch.Tensor):

        * value: the optimum, nonnegative.
        * f: an optimal ``(k,)`` vector with entries in ``[-1, 1]``.
    """
    k = len(problem.points)
    if k == 0:
        return 0.0, torch.zeros(0, dtype=torch.float64)
    A, b = problem.constraints()
    shifted, g = simplex_max(problem.coefficients, A, b)
    value = shifted - problem.coefficients.sum().item()
    return max(value, 0.0), g - 1.0


def flat_distance(mu, nu, model):
    """Flat distance between two finite-support measures on ``model``."""
    value, _ = solve_lp(FlatMetricProblem.from_measures(mu, nu, model))
    return value
