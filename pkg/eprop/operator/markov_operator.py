# -*- coding: utf-8 -*-
"""The Markov operator ``P`` on measures and its dual ``U`` on observables.

``P`` acts atom by atom so rational weights stay exact. ``U`` acts on
float64 value tensors through the dense transition matrix.
"""
import torch

from eprop.measure import DiscreteMeasure
from eprop.operator.observable import Observable

# Largest iteration count any single call may request.
DEFAULT_HORIZON_CAP = 10000


def _check_steps(n, horizon_cap, minimum=0):
    if isinstance(n, bool) or not isinstance(n, int) or n < minimum:
        raise ValueError("iteration count must be an integer >= %d, got %r"
                         % (minimum, n))
    if horizon_cap is not None and n > horizon_cap:
        raise ValueError("iteration count %d exceeds the horizon cap %d"
                         % (n, horizon_cap))


def apply(model, mu):
    """``P mu = sum_x mu(x) kernel(x)``."""
    acc = {}
    for s, w in mu:
        for t, p in model.row(s):
            acc[t] = acc.get(t, 0) + w * p
    return DiscreteMeasure(acc)


def iterate(model, mu, n, horizon_cap=DEFAULT_HORIZON_CAP):
    """``P^n mu``; ``iterate(model, mu, 0)`` is ``mu``."""
    _check_steps(n, horizon_cap)
    for _ in range(n):
        mu = apply(model, mu)
    return mu


def trajectory(model, mu, n, horizon_cap=DEFAULT_HORIZON_CAP):
    """Yield ``P^k mu`` for ``k = 0..n``."""
    _check_steps(n, horizon_cap)
    yield mu
    for _ in range(n):
        mu = apply(model, mu)
        yield mu


def dual_apply(model, f):
    """``(Uf)(x) = <f, kernel(x)>``."""
    values = model.transition_matrix().mv(f.values)
    return Observable(values, f.sup_bound, None, name="U" + f.name)


def dual_iterate(model, f, n, horizon_cap=DEFAULT_HORIZON_CAP):
    """``U^n f``; for deterministic models this is ``f o T^n``."""
    _check_steps(n, horizon_cap)
    if n == 0:
        return f
    values = f.values
    mat = model.transition_matrix()
    for _ in range(n):
        values = mat.mv(values)
    return Observable(values, f.sup_bound, None,
                      name="U^%d %s" % (n, f.name))


def dual_orbit(model, f, n, horizon_cap=DEFAULT_HORIZON_CAP):
    """Stack ``U^0 f .. U^n f``.

    Returns:
        torch.Tensor: ``(n + 1, num_states)``; row ``k`` is ``U^k f``.
    """
    _check_steps(n, horizon_cap)
    mat = model.transition_matrix()
    orbit = torch.empty(n + 1, f.values.numel(), dtype=torch.float64)
    orbit[0] = f.values
    for k in range(1, n + 1):
        orbit[k] = mat.mv(orbit[k - 1])
    return orbit


def cesaro_average(model, f, n, horizon_cap=DEFAULT_HORIZON_CAP):
    """``A_n f = (1/n) sum_{k=1..n} U^k f`` from one forward sweep."""
    _check_steps(n, horizon_cap, minimum=1)
    mat = model.transition_matrix()
    values = f.values
    running = torch.zeros_like(values)
    for _ in range(n):
        values = mat.mv(values)
        running += values
    return Observable(running / n, f.sup_bound, None,
                      name="A_%d %s" % (n, f.name))


def dobrushin_coefficient(model):
    """``1 - min_{i,j} sum_k min(p_ik, p_jk)``."""
    mat = model.transition_matrix()
    overlap = torch.min(mat.unsqueeze(1), mat.unsqueeze(0)).sum(-1)
    return 1.0 - overlap.min().item()


def feller_table(model, pairs=None):
    """Flat distance between kernel rows against the distance of states.

    On a finite model the Feller property holds trivially; the table shows
    how close ``kernel(x)`` and ``kernel(y)`` are for nearby ``x, y``. No
    verdict is derived from it.

    Returns:
        list of (int, int, float, float): ``(x, y, d(x, y), flat)`` sorted
        by increasing ``d(x, y)``.
    """
    from eprop.flatmetric import flat_distance

    if pairs is None:
        n = model.num_states
        pairs = [(x, y) for x in range(n) for y in range(x + 1, n)]
    rows = [(x, y, float(model.distance(x, y)),
             flat_distance(model.row(x), model.row(y), model))
            for x, y in pairs]
    rows.sort(key=lambda r: (r[2], r[0], r[1]))
    return rows
