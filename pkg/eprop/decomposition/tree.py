# -*- coding: utf-8 -*-
"""Configuration and result types of the measure decomposition."""
from eprop.operator import DEFAULT_HORIZON_CAP


class SearchHorizonError(RuntimeError):
    """No iterate up to the search horizon put mass above alpha in the
    target ball."""

    def __init__(self, message, level):
        super(SearchHorizonError, self).__init__(message)
        self.level = level


class PreconditionError(ValueError):
    pass


def _positive_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError("%s must be a positive integer, got %r"
                         % (name, value))


class DecompositionConfig(object):
    """Parameters of one decomposition.

    Args:
        x0 (int): starting state.
        z (int): centre of the target ball.
        r (number): radius of the target ball ``B(z, r)``.
        alpha (number): mass threshold in ``(0, 1)``; a Fraction keeps the
            construction exact on rational kernels.
        k (int): number of levels.
        n_search (int): largest step count tried per level.
        eps (float): accuracy used to pick ``k`` and the lemma ball.
    """

    def __init__(self, x0, z, r, alpha, k, n_search=100, eps=0.05):
        if not 0 < alpha < 1:
            raise ValueError("alpha must lie in (0, 1), got %r" % (alpha,))
        if not r > 0:
            raise ValueError("ball radius must be positive, got %r" % (r,))
        _positive_int("k", k)
        _positive_int("n_search", n_search)
        if n_search > DEFAULT_HORIZON_CAP:
            raise ValueError("n_search %d exceeds the horizon cap %d"
                             % (n_search, DEFAULT_HORIZON_CAP))
        if not eps > 0:
            raise ValueError("eps must be positive, got %r" % (eps,))
        self.x0 = x0
        self.z = z
        self.r = r
        self.alpha = alpha
        self.k = k
        self.n_search = n_search
        self.eps = eps

    def to_json(self):
        return {"x0": self.x0, "z": self.z, "r": float(self.r),
                "alpha": float(self.alpha), "alpha_exact": str(self.alpha),
                "k": self.k, "n_search": self.n_search,
                "eps": float(self.eps)}

    def __repr__(self):
        return ("DecompositionConfig(x0=%d, z=%d, r=%s, alpha=%s, k=%d)"
                % (self.x0, self.z, self.r, self.alpha, self.k))


class DecompositionLevel(object):
    """Level ``i``: ``P^{n_i} mu_{i-1} = alpha nu_i + (1 - alpha) mu_i``.

    ``mass`` is the weight ``P^{n_i} mu_{i-1}`` gives ``B(z, r_i)``.
    """

    def __init__(self, index, n, radius, nu, mu, mass):
        self.index = index
        self.n = n
        self.radius = radius
        self.nu = nu
        self.mu = mu
        self.mass = mass

    def to_json(self):
        return {"level": self.index, "n": self.n,
                "r": float(self.radius), "mass": float(self.mass),
                "nu": self.nu.to_json(), "mu": self.mu.to_json()}


class DecompositionTree(object):
    """All levels built from ``delta_{x0}`` under ``cfg``."""

    def __init__(self, cfg, levels, exact=False):
        self.cfg = cfg
        self.levels = list(levels)
        self.exact = exact

    def __len__(self):
        return len(self.levels)

    def __getitem__(self, i):
        return self.levels[i]

    @property
    def steps(self):
        return [lvl.n for lvl in self.levels]

    @property
    def radii(self):
        return [lvl.radius for lvl in self.levels]

    @property
    def total_steps(self):
        return sum(self.steps)

    def to_json(self):
        return {"config": self.cfg.to_json(), "exact": self.exact,
                "total_steps": self.total_steps,
                "levels": [lvl.to_json() for lvl in self.levels]}
