# -*- coding: utf-8 -*-
"""The inductive decomposition of ``P^n delta_{x0}`` into ball pieces.

Level ``i`` waits ``n_i`` steps until the ball ``B(z, r)`` carries more
than ``alpha`` of ``P^{n_i} mu_{i-1}``, then splits off ``alpha`` times the
conditional law on a slightly smaller ball ``B(z, r_i)``:

    P^{n_i} mu_{i-1} = alpha nu_i + (1 - alpha) mu_i
"""
from fractions import Fraction

from eprop.decomposition.tree import (
    DecompositionConfig, DecompositionLevel, DecompositionTree,
    PreconditionError, SearchHorizonError)
from eprop.diagnostics import liminf_ball_mass
from eprop.measure import ball_mass, dirac, residual, restrict_normalize
from eprop.operator import apply, iterate
from eprop.space import Ball, kernel_is_exact
from eprop.utils.logging import logger
from eprop.utils.misc import is_exact

# Default accuracy for the number of levels.
DEFAULT_EPS = 0.05
DEFAULT_N_SEARCH = 100


def choose_k(alpha, sup_bound, eps):
    """Smallest ``k >= 1`` with ``2 (1 - alpha)^k sup_bound < eps``."""
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1), got %r" % (alpha,))
    if not eps > 0:
        raise ValueError("eps must be positive, got %r" % (eps,))
    k = 1
    while not 2 * (1 - alpha) ** k * sup_bound < eps:
        k += 1
    return k


def target_mass(model, z, r):
    """``gamma = mu*(B(z, r))``."""
    if model.invariant_measure is None:
        raise PreconditionError("model '%s' has no invariant measure"
                                % model.tag)
    return ball_mass(model.invariant_measure, Ball(z, r), model)


def select_alpha(model, z, r, exact=None):
    """``alpha = gamma / 2``, rational when ``exact``.

    ``exact`` defaults to whether the kernel is rational; a float ``gamma``
    (a solved invariant measure) is then rounded to a nearby fraction.
    """
    gamma = target_mass(model, z, r)
    if not gamma > 0:
        raise PreconditionError("Choose α ∈ (0, γ): B(%d, %s) carries no "
                                "invariant mass" % (z, r))
    if exact is None:
        exact = kernel_is_exact(model)
    if not exact:
        return float(gamma) / 2
    if is_exact(gamma):
        return Fraction(gamma) / 2
    return Fraction(gamma / 2).limit_denominator(10 ** 6)


def validate_alpha(model, cfg, window=None):
    """Check ``0 < alpha < gamma`` and ``alpha`` below the liminf proxy.

    Args:
        window ((int, int) or None): iterates over which the ball mass of
            ``P^n delta_{x0}`` must exceed ``alpha``; defaults to
            ``(n_search, 2 n_search)``.

    Returns:
        (number, float): ``gamma`` and the liminf proxy.

    Raises:
        PreconditionError
    """
    ball = Ball(cfg.z, cfg.r)
    gamma = target_mass(model, cfg.z, cfg.r)
    if not cfg.alpha < gamma:
        raise PreconditionError("Choose α ∈ (0, γ): alpha = %s but gamma = "
                                "mu*(B(z, r)) = %s" % (cfg.alpha, gamma))
    if window is None:
        window = (cfg.n_search, 2 * cfg.n_search)
    low = liminf_ball_mass(model, dirac(cfg.x0), ball, window)
    if not cfg.alpha < low:
        raise PreconditionError(
            "Choose α ∈ (0, γ): alpha = %s is not below the ball mass %.6g "
            "of P^n delta_x0 over n in [%d, %d]"
            % (cfg.alpha, low, window[0], window[1]))
    return gamma, low


def split_radius(model, mu, z, r, alpha):
    """Radius ``r_i < r`` of a ball around ``z`` holding more than ``alpha``
    of ``mu`` with no atom of ``mu`` on its sphere.

    Atom distances to ``z`` are sorted; ``d_j`` is the first one at which
    the cumulative mass exceeds ``alpha``. The radius is the midpoint
    between ``d_j`` and the next atom distance, capped at ``r``.
    """
    by_distance = {}
    for s, w in mu:
        d = model.distance(s, z)
        if d < r:
            by_distance[d] = by_distance.get(d, 0) + w
    dists = sorted(by_distance)
    cumulative = 0
    for j, d in enumerate(dists):
        cumulative += by_distance[d]
        if cumulative > alpha:
            upper = dists[j + 1] if j + 1 < len(dists) else r
            return (d + min(upper, r)) / 2
    return None


def default_config(model, f, z=None, r=None, x0=None, alpha=None, k=None,
                   n_search=DEFAULT_N_SEARCH, eps=DEFAULT_EPS):
    """Fill unset parameters.

    ``z`` is the model origin, ``r`` half the smallest positive distance
    from ``z``, ``x0`` the state farthest from ``z``, ``alpha`` from
    :func:`select_alpha` and ``k`` from :func:`choose_k` with ``|f|``.
    """
    if z is None:
        z = model.origin
    model.check_state(z)
    if r is None:
        positive = [d for d in model.realized_distances(z) if d > 0]
        if not positive:
            raise PreconditionError("model '%s' has a single state"
                                    % model.tag)
        r = positive[0] / 2
    if x0 is None:
        x0 = max(range(model.num_states),
                 key=lambda s: (model.distance(s, z), -s))
    model.check_state(x0)
    if alpha is None:
        alpha = select_alpha(model, z, r)
    if k is None:
        k = choose_k(alpha, f.sup_bound, eps)
    return DecompositionConfig(x0, z, r, alpha, k, n_search, eps)


def decompose(model, cfg, validate=True):
    """Build the decomposition tree of ``delta_{x0}``.

    Raises:
        PreconditionError: ``alpha`` fails :func:`validate_alpha`.
        SearchHorizonError: a level finds no ``n <= n_search``.
        MeasureDomainError: a residual turned negative.
    """
    model.check_state(cfg.x0)
    model.check_state(cfg.z)
    if validate:
        validate_alpha(model, cfg)
    exact = kernel_is_exact(model) and is_exact(cfg.alpha)
    ball = Ball(cfg.z, cfg.r)
    levels = []
    mu = dirac(cfg.x0)
    for i in range(1, cfg.k + 1):
        current = mu
        n = None
        for step in range(1, cfg.n_search + 1):
            current = apply(model, current)
            if ball_mass(current, ball, model) > cfg.alpha:
                n = step
                break
        if n is None:
            raise SearchHorizonError(
                "level %d: no n <= %d puts mass above alpha = %s in "
                "B(%d, %s)" % (i, cfg.n_search, cfg.alpha, cfg.z, cfg.r),
                level=i)
        radius = split_radius(model, current, cfg.z, cfg.r, cfg.alpha)
        level = _split(model, current, cfg, i, n, radius)
        logger.debug("level %d: n=%d r=%s mass=%s"
                     % (i, n, radius, level.mass))
        levels.append(level)
        mu = level.mu
    tree = DecompositionTree(cfg, levels, exact=exact)
    logger.info("decomposed delta_%d into %d levels over %d steps"
                % (cfg.x0, len(tree), tree.total_steps))
    return tree


def _split(model, current, cfg, index, n, radius):
    inner = Ball(cfg.z, radius)
    nu = restrict_normalize(current, inner, model)
    mu = residual(current, cfg.alpha, nu)
    return DecompositionLevel(index, n, radius, nu, mu,
                              ball_mass(current, inner, model))


def decompose_along(model, tree, x):
    """Decompose ``delta_x`` reusing the steps and radii of ``tree``.

    Stops at the first level where ``B(z, r_i)`` does not carry more than
    ``alpha``: ``x`` is then not close enough to ``x0``.

    Returns:
        (list[DecompositionLevel], bool): levels built and whether every
        level of ``tree`` could be reproduced.
    """
    cfg = tree.cfg
    model.check_state(x)
    mu = dirac(x)
    levels = []
    for ref in tree.levels:
        current = iterate(model, mu, ref.n, horizon_cap=None)
        if not ball_mass(current, Ball(cfg.z, ref.radius), model) \
                > cfg.alpha:
            return levels, False
        level = _split(model, current, cfg, ref.index, ref.n, ref.radius)
        levels.append(level)
        mu = level.mu
    return levels, True
