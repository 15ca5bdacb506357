# -*- coding: utf-8 -*-
"""Numerical checks of the decomposition: the telescoping identity, the
continuity of the pieces in the starting point, and the final oscillation
estimate."""
from eprop.decomposition.construction import decompose, decompose_along
from eprop.diagnostics import (
    DiagnosticReport, default_candidate_balls, find_lemma_ball)
from eprop.flatmetric import flat_distance
from eprop.measure import combine, dirac, max_deviation
from eprop.operator import dual_orbit, iterate
from eprop.space import Ball
from eprop.utils.logging import logger

# Deviation allowed by the float telescoping check.
FLOAT_GATE = 1e-10

CLOSE = "CLOSE"
NOT_CLOSE_ENOUGH = "NOT-CLOSE-ENOUGH"
PASS = "PASS"
FAIL = "FAIL"
NOT_APPLICABLE = "NOT-APPLICABLE"


def telescoped(model, tree, extra_steps=0):
    """Right-hand side of the telescoping identity, pushed ``extra_steps``
    further forward.

    ``sum_i alpha (1-alpha)^{i-1} P^{n_{i+1}+..+n_k+m} nu_i
    + (1-alpha)^k P^m mu_k``
    """
    alpha = tree.cfg.alpha
    terms = []
    later = extra_steps
    weight = 1
    weights = []
    for lvl in tree.levels:
        weights.append(alpha * weight)
        weight *= 1 - alpha
    for lvl, coef in reversed(list(zip(tree.levels, weights))):
        terms.append((coef, iterate(model, lvl.nu, later, horizon_cap=None)))
        later += lvl.n
    last = tree.levels[-1].mu
    terms.append((weight, iterate(model, last, extra_steps,
                                  horizon_cap=None)))
    return combine(terms)


def verify_telescoping(model, cfg, tree, extra_steps=0):
    """Max atomwise deviation between ``P^{n_1+..+n_k+m} delta_{x0}`` and
    the telescoped mixture.

    Exactly ``0`` when the tree was built in rational arithmetic.
    """
    if extra_steps < 0:
        raise ValueError("extra_steps must be nonnegative")
    lhs = iterate(model, dirac(cfg.x0), tree.total_steps + extra_steps,
                  horizon_cap=None)
    deviation = max_deviation(lhs, telescoped(model, tree, extra_steps))
    logger.info("telescoping deviation %s (%s mode, %d extra steps)"
                % (deviation, "exact" if tree.exact else "float",
                   extra_steps))
    return deviation


def telescoping_ok(tree, deviation):
    if tree.exact:
        return deviation == 0
    return deviation <= FLOAT_GATE


def continuity_scan(model, cfg, probes, tree=None):
    """Flat distances between the pieces of ``delta_x`` and ``delta_{x0}``.

    The steps and radii of the ``x0`` tree are reused for every probe. A
    probe whose level ``i`` cannot put more than ``alpha`` in ``B(z, r_i)``
    gets a ``NOT-CLOSE-ENOUGH`` row for that level and no further rows.

    Returns:
        DiagnosticReport: rows ``(probe_id, distance, level, flat_nu,
        flat_mu, status)``.
    """
    if tree is None:
        tree = decompose(model, cfg)
    rows = []
    for x in probes:
        d = float(model.distance(x, cfg.x0))
        levels, complete = decompose_along(model, tree, x)
        for lvl, ref in zip(levels, tree.levels):
            rows.append((x, d, lvl.index,
                         flat_distance(lvl.nu.to_float(),
                                       ref.nu.to_float(), model),
                         flat_distance(lvl.mu.to_float(),
                                       ref.mu.to_float(), model),
                         CLOSE))
        if not complete:
            rows.append((x, d, len(levels) + 1, None, None,
                         NOT_CLOSE_ENOUGH))
    rows.sort(key=lambda r: (-r[1], r[0], r[2]))
    return DiagnosticReport(
        "continuity",
        ["probe_id", "distance", "level", "flat_nu", "flat_mu", "status"],
        rows, params={"model": model.tag, "x0": cfg.x0})


def oscillation_bound(cfg, f, eps_ball):
    """``eps_ball * (1 - (1-alpha)^k) + 2 (1-alpha)^k |f|``.

    The first term is ``eps_ball * sum_i alpha (1-alpha)^{i-1}``.
    """
    tail = float((1 - cfg.alpha) ** cfg.k)
    return eps_ball * (1.0 - tail) + 2.0 * tail * f.sup_bound


def lemma_candidates(model, cfg):
    """``B(z, 2r)`` first, then every default candidate ball containing
    ``B(z, r)``."""
    first = Ball(cfg.z, 2 * cfg.r)
    inner = set(Ball(cfg.z, cfg.r).members(model))
    balls = [first]
    for ball in default_candidate_balls(model):
        if ball != first and inner <= set(ball.members(model)):
            balls.append(ball)
    return balls


class ContradictionReport(DiagnosticReport):
    """Per-probe comparison of measured gaps with the oscillation bound.

    ``status`` is ``NOT-APPLICABLE`` when no lemma ball exists, ``FAIL``
    when a close probe exceeds its bound and ``PASS`` otherwise.
    """

    def __init__(self, status, rows, bound=None, lemma=None, window=None,
                 params=None, notes=None):
        super(ContradictionReport, self).__init__(
            "contradiction",
            ["probe_id", "distance", "gap", "bound", "slack", "status"],
            rows, horizon=None if window is None else window[1],
            params=params, notes=notes)
        self.status = status
        self.bound = bound
        self.lemma = lemma
        self.window = window

    def to_json(self):
        out = super(ContradictionReport, self).to_json()
        out.update({"status": self.status, "bound": self.bound,
                    "window": self.window,
                    "lemma": None if self.lemma is None
                    else self.lemma.to_json()})
        return out

    def summary(self):
        return "contradiction check: %s (%d rows)" % (self.status,
                                                      len(self.rows))


def check_contradiction_bound(model, cfg, f, plan, tree=None, scan=None):
    """Compare ``|U^n f(x) - U^n f(x0)|`` with :func:`oscillation_bound`.

    The lemma ball is searched among :func:`lemma_candidates` with
    accuracy ``cfg.eps`` up to ``plan.horizon``. Gaps are measured for
    ``n`` from ``max(tail_start, n_1 + .. + n_k + N)`` to the horizon,
    ``N`` being the lemma's settling step. Each close probe passes when
    its gap is at most the bound plus a slack of ``2 |f|`` times its
    summed flat distances.
    """
    params = {"model": model.tag, "x0": cfg.x0, "eps": float(cfg.eps)}
    lemma = find_lemma_ball(model, f, cfg.eps, lemma_candidates(model, cfg),
                            n_max=plan.horizon)
    if not lemma.found:
        logger.info("contradiction check not applicable: no lemma ball")
        return ContradictionReport(NOT_APPLICABLE, [], lemma=lemma,
                                   params=params, notes=lemma.notes)
    if tree is None:
        tree = decompose(model, cfg)
    if scan is None:
        scan = continuity_scan(model, cfg, plan.probes, tree)
    start = max(plan.tail_start, tree.total_steps + lemma.start)
    if start > plan.horizon:
        note = ("measurement window [%d, %d] is empty; raise the horizon"
                % (start, plan.horizon))
        return ContradictionReport(NOT_APPLICABLE, [], lemma=lemma,
                                   params=params,
                                   notes=lemma.notes + [note])
    bound = oscillation_bound(cfg, f, lemma.oscillation)
    orbit = dual_orbit(model, f, plan.horizon)
    reference = orbit[start:, cfg.x0]
    status_at = {}
    slack_at = {}
    for r in scan.rows:
        x, status = r[0], r[5]
        if status == NOT_CLOSE_ENOUGH:
            status_at[x] = NOT_CLOSE_ENOUGH
        else:
            status_at.setdefault(x, CLOSE)
            slack_at[x] = slack_at.get(x, 0.0) + r[3] + r[4]
    rows = []
    overall = PASS
    for x in plan.probes:
        d = float(model.distance(x, cfg.x0))
        gap = (orbit[start:, x] - reference).abs().max().item()
        if status_at.get(x, CLOSE) == NOT_CLOSE_ENOUGH:
            rows.append((x, d, gap, bound, None, NOT_CLOSE_ENOUGH))
            continue
        slack = 2.0 * f.sup_bound * slack_at.get(x, 0.0)
        verdict = PASS if gap <= bound + slack + 1e-12 else FAIL
        if verdict == FAIL:
            overall = FAIL
        rows.append((x, d, gap, bound, slack, verdict))
    logger.info("contradiction check: %s with bound %.6g on [%d, %d]"
                % (overall, bound, start, plan.horizon))
    return ContradictionReport(overall, rows, bound=bound, lemma=lemma,
                               window=(start, plan.horizon), params=params,
                               notes=lemma.notes)
