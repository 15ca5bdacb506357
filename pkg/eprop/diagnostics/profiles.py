# -*- coding: utf-8 -*-
"""Finite-horizon profiles: e-property, Cesàro e-property, stability."""
import torch
from tqdm import tqdm

from eprop.diagnostics.report import (
    DEFAULT_TOL, DiagnosticReport, gap_verdict, trace_verdict)
from eprop.flatmetric import flat_distance
from eprop.measure import DiscreteMeasure, dirac, pair
from eprop.operator import dual_orbit
from eprop.utils.logging import logger


def measure_vector(model, mu):
    """Dense ``(num_states,)`` float64 weights of ``mu``."""
    vec = torch.zeros(model.num_states, dtype=torch.float64)
    for s, w in mu:
        vec[model.check_state(s)] = float(w)
    return vec


def vector_measure(vec):
    return DiscreteMeasure((i, w) for i, w in enumerate(vec.tolist())
                           if w > 0)


def _require_invariant(model):
    if model.invariant_measure is None:
        raise ValueError("model '%s' has no invariant measure" % model.tag)
    return model.invariant_measure


def _probe_gaps(model, series, plan):
    """Tail-sup gaps from ``series``: ``(N + 1, num_states)`` values of the
    iterates, row ``n`` holding the ``n``-th one."""
    gaps = []
    for i, x in enumerate(plan.probes):
        lo, hi = plan.window(i)
        diff = series[lo:hi + 1, x] - series[lo:hi + 1, plan.target]
        gaps.append(diff.abs().max().item())
    return gaps


def _profile_report(name, model, f, plan, gaps, tol):
    rows = [(x, float(model.distance(x, plan.target)), g)
            for x, g in zip(plan.probes, gaps)]
    verdict = gap_verdict(gaps, [d for _, d, _ in rows], tol)
    params = dict(plan.to_json(), observable=f.name, tol=tol,
                  model=model.tag)
    report = DiagnosticReport(name, ["probe_id", "distance", "gap"], rows,
                              verdict=verdict, horizon=plan.last_step(),
                              params=params)
    logger.info("%s on %s: %s" % (name, model.tag, report.summary()))
    return report


def eproperty_profile(model, f, plan, tol=DEFAULT_TOL):
    """``gap(x) = max_{N0 <= n <= N} |U^n f(x) - U^n f(z)|`` per probe.

    Args:
        model (MetricModel): the chain.
        f (Observable): bounded Lipschitz observable.
        plan (ProbePlan): target, probes and window.
        tol (float): verdict tolerance.

    Returns:
        DiagnosticReport: rows ``(probe_id, distance, gap)``.
    """
    plan.validate(model)
    orbit = dual_orbit(model, f, plan.last_step())
    return _profile_report("eproperty", model, f, plan,
                           _probe_gaps(model, orbit, plan), tol)


def cesaro_series(model, f, n_max):
    """``(n_max + 1, num_states)`` tensor whose row ``n >= 1`` is ``A_n f``.

    Row ``0`` is ``f`` itself and is never used by a profile window.
    """
    orbit = dual_orbit(model, f, n_max)
    series = torch.empty_like(orbit)
    series[0] = orbit[0]
    steps = torch.arange(1, n_max + 1, dtype=torch.float64).unsqueeze(1)
    series[1:] = orbit[1:].cumsum(0) / steps
    return series


def cesaro_profile(model, f, plan, tol=DEFAULT_TOL):
    """Same as :func:`eproperty_profile` with ``A_n f`` in place of
    ``U^n f``."""
    plan.validate(model)
    series = cesaro_series(model, f, plan.last_step())
    return _profile_report("cesaro", model, f, plan,
                           _probe_gaps(model, series, plan), tol)


def stability_trace(model, mu, n_max):
    """``[(n, ||P^n mu - mu*||_FM) for n = 0..n_max]``.

    Raises:
        ValueError: the model has no invariant measure.
    """
    target = _require_invariant(model)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative, got %r" % (n_max,))
    mat = model.transition_matrix()
    vec = measure_vector(model, mu)
    trace = []
    for n in range(n_max + 1):
        if n > 0:
            vec = vec.matmul(mat)
        trace.append((n, flat_distance(vector_measure(vec), target, model)))
    return trace


def stability_report(model, mu, n_max, tol=DEFAULT_TOL):
    trace = stability_trace(model, mu, n_max)
    verdict = trace_verdict([d for _, d in trace], tol)
    return DiagnosticReport("stability", ["n", "flat_distance"], trace,
                            verdict=verdict, horizon=n_max,
                            params={"model": model.tag, "tol": tol,
                                    "start": mu.to_json()})


def absorption_time(trace, tol=DEFAULT_TOL):
    """First ``n`` after which the trace stays within ``tol``, else None."""
    first = None
    for n, d in trace:
        if d <= tol:
            if first is None:
                first = n
        else:
            first = None
    return first


def stability_scan(model, n_max, tol=DEFAULT_TOL, verbose=False):
    """Stability trace from every Dirac start.

    Returns:
        DiagnosticReport: rows ``(state, absorption_time, final_distance)``
        with a verdict that holds when every start converges within ``tol``.
    """
    _require_invariant(model)
    rows = []
    for s in tqdm(range(model.num_states), disable=not verbose,
                  desc="stability"):
        trace = stability_trace(model, dirac(s), n_max)
        rows.append((s, absorption_time(trace, tol), trace[-1][1]))
    verdict = trace_verdict([max(r[2] for r in rows)], tol)
    return DiagnosticReport("stability-scan",
                            ["state", "absorption_time", "final_distance"],
                            rows, verdict=verdict, horizon=n_max,
                            params={"model": model.tag, "tol": tol})


def liminf_ball_mass(model, mu, ball, n_range):
    """``min_{n_lo <= n <= n_hi} P^n mu(ball)``, a finite-window proxy of
    the liminf."""
    n_lo, n_hi = n_range
    if not 0 <= n_lo <= n_hi:
        raise ValueError("invalid window (%r, %r)" % (n_lo, n_hi))
    mask = torch.tensor([ball.contains(model, s)
                         for s in range(model.num_states)],
                        dtype=torch.float64)
    mat = model.transition_matrix()
    vec = measure_vector(model, mu)
    low = None
    for n in range(n_hi + 1):
        if n > 0:
            vec = vec.matmul(mat)
        if n >= n_lo:
            mass = vec.dot(mask).item()
            low = mass if low is None else min(low, mass)
    return low


def settling_times(model, f, eps, horizon):
    """Per state, the smallest ``n`` with ``|U^m f(x) - <f, mu*>| <= eps/2``
    for every ``n <= m <= horizon``; ``None`` where that never happens.

    On a ball of states whose settling times are at most ``N`` the iterates
    ``U^n f`` oscillate by at most ``eps`` for ``N <= n <= horizon``.
    """
    target = _require_invariant(model)
    level = pair(f, target.to_float())
    orbit = dual_orbit(model, f, horizon)
    far = (orbit - level).abs() > eps / 2.0
    times = []
    for s in range(model.num_states):
        bad = far[:, s].nonzero().view(-1)
        if bad.numel() == 0:
            times.append(0)
        elif bad[-1].item() == horizon:
            times.append(None)
        else:
            times.append(bad[-1].item() + 1)
    return times
