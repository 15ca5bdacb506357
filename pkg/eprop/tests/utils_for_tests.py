import itertools
from fractions import Fraction

import torch

from eprop.space import build_doeblin


def product_dict(**kwargs):
    keys = kwargs.keys()
    vals = kwargs.values()
    for instance in itertools.product(*vals):
        yield dict(zip(keys, instance))


def orbit_values(model, f, x, n_max):
    """``f(T^n x)`` for ``n = 0..n_max`` by following successors."""
    values = []
    for _ in range(n_max + 1):
        values.append(f(x))
        x = model.successor(x)
    return values


def trajectory_gap(model, f, x, z, lo, hi):
    """``max_{lo <= n <= hi} |f(T^n x) - f(T^n z)|`` on a deterministic
    model."""
    fx = orbit_values(model, f, x, hi)
    fz = orbit_values(model, f, z, hi)
    return max(abs(a - b) for a, b in zip(fx[lo:], fz[lo:]))


def trajectory_cesaro(model, f, x, n):
    """``(1/n) sum_{k=1..n} f(T^k x)`` on a deterministic model."""
    values = orbit_values(model, f, x, n)
    return sum(values[1:]) / float(n)


def grid_flat_distance(coefficients, distances, step=0.05):
    """Brute force ``max c.f`` over ``f`` on the grid ``{-1, .., 1}``.

    With distances on the same grid the vertices of the feasible polytope
    lie on it too, so the maximum is exact.
    """
    k = len(coefficients)
    ticks = int(round(2.0 / step)) + 1
    axis = torch.linspace(-1.0, 1.0, ticks, dtype=torch.float64)
    grids = torch.meshgrid(*([axis] * k))
    points = torch.stack([g.reshape(-1) for g in grids], 1)
    feasible = torch.ones(points.size(0), dtype=torch.bool)
    for i in range(k):
        for j in range(i + 1, k):
            diff = (points[:, i] - points[:, j]).abs()
            feasible &= diff <= distances[i][j] + 1e-9
    c = torch.tensor([float(v) for v in coefficients], dtype=torch.float64)
    values = points[feasible].mv(c)
    return values.max().item()


def random_rational_kernel(n, generator, heavy=None):
    """Row-stochastic matrix of Fractions with entries in ``[1, 3]/sum``;
    column ``heavy`` gets 5 extra units per row."""
    rows = []
    for _ in range(n):
        ints = torch.randint(1, 4, (n,), generator=generator).tolist()
        if heavy is not None:
            ints[heavy] += 5
        total = sum(ints)
        rows.append([Fraction(v, total) for v in ints])
    return rows


def random_line_metric(n, generator):
    """``|c_i - c_j| / 4`` for distinct integer coordinates."""
    coords = (torch.randperm(20, generator=generator)[:n] + 1).tolist()
    return [[Fraction(abs(a - b), 4) for b in coords] for a in coords]


def random_rational_model(n, generator, heavy=0):
    return build_doeblin(random_rational_kernel(n, generator, heavy),
                         random_line_metric(n, generator),
                         tag="random%d" % n)


def random_values(n, generator, low=-1.0, high=1.0):
    return low + (high - low) * torch.rand(n, generator=generator,
                                           dtype=torch.float64)
