# -*- coding: utf-8 -*-
"""Finite-support nonnegative measures and their algebra.

Weights are python numbers. Ints and Fractions keep every operation exact
(the decomposition relies on this); floats are compared with
:data:`eprop.utils.misc.TOL`.
"""
from fractions import Fraction

from eprop.utils.misc import TOL, is_exact


class MeasureDomainError(ValueError):
    pass


class DiscreteMeasure(object):
    """Nonnegative measure with finitely many atoms.

    Atoms are kept sorted by state id, zero weights are dropped, so two
    measures are equal iff their atom tuples are equal.

    Args:
        atoms (dict or iterable): ``{state: weight}`` or ``(state, weight)``
            pairs. Weights must be nonnegative and states unique.
    """

    __slots__ = ("atoms",)

    def __init__(self, atoms=()):
        if isinstance(atoms, dict):
            pairs = list(atoms.items())
        else:
            pairs = list(atoms)
        seen = set()
        clean = []
        for state, weight in pairs:
            state = int(state)
            if state in seen:
                raise ValueError("duplicate atom for state %d" % state)
            seen.add(state)
            if weight != weight or weight < 0:
                raise ValueError("negative or NaN weight %r at state %d"
                                 % (weight, state))
            if weight == 0:
                continue
            clean.append((state, weight))
        clean.sort(key=lambda a: a[0])
        self.atoms = tuple(clean)

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self):
        return len(self.atoms)

    def __eq__(self, other):
        return isinstance(other, DiscreteMeasure) and self.atoms == other.atoms

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.atoms)

    def __repr__(self):
        inner = ", ".join("%d: %s" % (s, w) for s, w in self.atoms)
        return "DiscreteMeasure({%s})" % inner

    def weight(self, state):
        for s, w in self.atoms:
            if s == state:
                return w
        return 0

    def as_dict(self):
        return dict(self.atoms)

    def states(self):
        return [s for s, _ in self.atoms]

    def total_mass(self):
        return sum((w for _, w in self.atoms), 0)

    def is_probability(self, tol=TOL):
        return abs(self.total_mass() - 1) <= tol

    def is_exact(self):
        return all(is_exact(w) for _, w in self.atoms)

    def to_float(self):
        return DiscreteMeasure((s, float(w)) for s, w in self.atoms)

    def to_json(self):
        return [{"state": s, "w": float(w)} for s, w in self.atoms]

    @classmethod
    def from_json(cls, items):
        return cls((item["state"], item["w"]) for item in items)


def dirac(x):
    """Unit point mass at ``x``."""
    return DiscreteMeasure([(x, 1)])


def support(mu):
    """Atoms carrying positive weight."""
    return set(s for s, w in mu.atoms if w > 0)


def total_mass(mu):
    return mu.total_mass()


def ball_mass(mu, ball, model):
    """Mass of the open ball ``ball`` under ``mu``."""
    return sum((w for s, w in mu.atoms if ball.contains(model, s)), 0)


def restrict_normalize(mu, ball, model):
    """Condition ``mu`` on ``ball``.

    Raises:
        MeasureDomainError: the ball carries no mass.
    """
    inside = [(s, w) for s, w in mu.atoms if ball.contains(model, s)]
    mass = sum((w for _, w in inside), 0)
    if mass <= 0:
        raise MeasureDomainError("conditioning on null ball %r" % (ball,))
    if is_exact(mass):
        mass = Fraction(mass)
    return DiscreteMeasure((s, w / mass) for s, w in inside)


def residual(mu, alpha, nu):
    """Return ``(mu - alpha * nu) / (1 - alpha)``.

    Float weights whose magnitude falls below the tolerance are clipped to
    zero; rational weights are kept exactly.

    Raises:
        ValueError: ``alpha`` outside ``(0, 1)``.
        MeasureDomainError: the difference is negative beyond tolerance,
            i.e. ``alpha`` exceeded the conditional mass.
    """
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1), got %r" % (alpha,))
    scale = 1 - alpha
    mu_w = mu.as_dict()
    nu_w = nu.as_dict()
    out = []
    for state in sorted(set(mu_w) | set(nu_w)):
        diff = mu_w.get(state, 0) - alpha * nu_w.get(state, 0)
        if is_exact(diff):
            if diff < 0:
                raise MeasureDomainError(
                    "residual not a measure: weight %s at state %d"
                    % (diff, state))
        elif diff < -TOL:
            raise MeasureDomainError(
                "residual not a measure: weight %g at state %d"
                % (diff, state))
        elif abs(diff) < TOL:
            diff = 0.0
        out.append((state, diff / scale))
    return DiscreteMeasure(out)


def combine(terms):
    """Atomwise weighted sum of ``[(coefficient, measure), ...]``."""
    acc = {}
    for coef, mu in terms:
        if coef < 0:
            raise ValueError("negative coefficient %r" % (coef,))
        for s, w in mu.atoms:
            acc[s] = acc.get(s, 0) + coef * w
    return DiscreteMeasure(acc)


def pair(f, mu):
    """Integral of the observable ``f`` against ``mu``."""
    return sum((f(s) * w for s, w in mu.atoms), 0)


def max_deviation(mu, nu):
    """Largest atomwise weight difference; exact for rational measures."""
    mu_w = mu.as_dict()
    nu_w = nu.as_dict()
    states = set(mu_w) | set(nu_w)
    if not states:
        return Fraction(0) if mu.is_exact() and nu.is_exact() else 0.0
    return max(abs(mu_w.get(s, 0) - nu_w.get(s, 0)) for s in states)
