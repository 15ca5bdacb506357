# -*- coding: utf-8 -*-
"""Metric state spaces carrying a Markov kernel."""
import torch

from eprop.measure import DiscreteMeasure
from eprop.utils.logging import logger
from eprop.utils.misc import TOL, double_tensor

# Above this many states the triangle inequality is checked on a
# deterministic strided sample instead of every triple.
EXHAUSTIVE_AXIOM_STATES = 200


class StateDescriptor(object):
    """One point of a model's state table.

    Args:
        state_id (int): position in the table.
        label (str): human readable name, e.g. ``"1/3"`` or ``"(5,2)"``.
        coords (list or None): coordinates for coordinate metrics.
        key (object or None): symbolic key for symbolic metrics.
    """

    __slots__ = ("state_id", "label", "coords", "key")

    def __init__(self, state_id, label, coords=None, key=None):
        self.state_id = state_id
        self.label = label
        self.coords = coords
        self.key = key

    def __repr__(self):
        return "State(%d, %s)" % (self.state_id, self.label)


class Metric(object):
    """Distance rule between two :class:`StateDescriptor`."""
    kind = None

    def __call__(self, a, b):
        raise NotImplementedError()


class RealAbsMetric(Metric):
    kind = "real_abs"

    def __call__(self, a, b):
        return abs(a.coords[0] - b.coords[0])


class SupNormMetric(Metric):
    kind = "coords_linf"

    def __call__(self, a, b):
        if len(a.coords) != len(b.coords):
            raise ValueError("coordinate dimension mismatch between %s "
                             "and %s" % (a.label, b.label))
        return max([abs(x - y) for x, y in zip(a.coords, b.coords)] + [0])


class ExplicitMetric(Metric):
    kind = "explicit"

    def __init__(self, matrix):
        self.matrix = [list(row) for row in matrix]

    def __call__(self, a, b):
        return self.matrix[a.state_id][b.state_id]


class PrimeLadderMetric(Metric):
    """Sup-norm between singleton sequences, evaluated symbolically.

    The state with key ``(p, i)`` is the sequence whose only nonzero entry
    ``i/p`` sits at position ``p**i - 1``. Those positions are distinct for
    distinct keys, so two different states differ in two entries (or one,
    when a state is zero) and the distance is the larger of the two values.
    """
    kind = "prime_ladder"

    def __call__(self, a, b):
        if a.state_id == b.state_id:
            return 0
        return max(a.coords[0], b.coords[0])


class Ball(object):
    """Open ball ``B(center, radius)`` with strict membership."""

    __slots__ = ("center", "radius")

    def __init__(self, center, radius):
        if not radius > 0:
            raise ValueError("ball radius must be positive, got %r"
                             % (radius,))
        self.center = int(center)
        self.radius = radius

    def contains(self, model, state):
        return model.distance(state, self.center) < self.radius

    def members(self, model):
        return [s for s in range(model.num_states)
                if self.contains(model, s)]

    def to_json(self):
        return {"center": self.center, "radius": float(self.radius)}

    def __eq__(self, other):
        return isinstance(other, Ball) and self.center == other.center \
            and self.radius == other.radius

    def __hash__(self):
        return hash((self.center, self.radius))

    def __repr__(self):
        return "Ball(%d, %s)" % (self.center, self.radius)


class MetricModel(object):
    """Finite (or truncated) metric space with a transition kernel.

    Models are immutable after construction; the dense tensors are built
    on first use and cached.

    Args:
        states (list[StateDescriptor]): the state table, ids ``0..n-1``.
        metric (Metric): distance rule.
        kernel (list[DiscreteMeasure]): probability row per state.
        tag (str): model-family name.
        invariant_measure (DiscreteMeasure or None): fixed point of the
            kernel, if known.
        origin (int): distinguished (zero / absorbing) state used by norms.
        truncated (bool): the model truncates an infinite space, so its
            isolated points need not be isolated in the full space.
    """

    def __init__(self, states, metric, kernel, tag, invariant_measure=None,
                 origin=0, truncated=False):
        for i, st in enumerate(states):
            if st.state_id != i:
                raise ValueError("state table out of order at position %d"
                                 % i)
        if len(kernel) != len(states):
            raise ValueError("kernel has %d rows for %d states"
                             % (len(kernel), len(states)))
        self.states = list(states)
        self.metric = metric
        self.kernel = list(kernel)
        self.tag = tag
        self.invariant_measure = invariant_measure
        self.origin = origin
        self.truncated = truncated
        self._distance_matrix = None
        self._transition_matrix = None

    @property
    def num_states(self):
        return len(self.states)

    def check_state(self, state):
        if not isinstance(state, int) or isinstance(state, bool) \
                or not 0 <= state < self.num_states:
            raise ValueError("invalid state id %r for model '%s' with %d "
                             "states" % (state, self.tag, self.num_states))
        return state

    def label(self, state):
        return self.states[state].label

    def distance(self, a, b):
        self.check_state(a)
        self.check_state(b)
        return self.metric(self.states[a], self.states[b])

    def norm(self, state):
        return self.distance(state, self.origin)

    def row(self, state):
        return self.kernel[self.check_state(state)]

    def is_deterministic(self):
        return all(len(row) == 1 for row in self.kernel)

    def successor(self, state):
        """Image of ``state`` under a deterministic kernel."""
        row = self.row(state)
        if len(row) != 1:
            raise ValueError("state %d has a non-Dirac kernel row" % state)
        return row.atoms[0][0]

    def distance_matrix(self):
        """``(n, n)`` float64 tensor of pairwise distances."""
        if self._distance_matrix is None:
            n = self.num_states
            self._distance_matrix = double_tensor(
                [[self.metric(self.states[i], self.states[j])
                  for j in range(n)] for i in range(n)])
        return self._distance_matrix

    def transition_matrix(self):
        """``(n, n)`` float64 row-stochastic tensor of the kernel."""
        if self._transition_matrix is None:
            n = self.num_states
            mat = torch.zeros(n, n, dtype=torch.float64)
            for i, row in enumerate(self.kernel):
                for j, w in row:
                    mat[i, j] = float(w)
            self._transition_matrix = mat
        return self._transition_matrix

    def realized_distances(self, center, states=None):
        """Sorted distinct distances from ``center`` to ``states``."""
        if states is None:
            states = range(self.num_states)
        return sorted(set(self.distance(s, center) for s in states))

    def validate(self):
        """Check every model invariant, raising ``ValueError`` on failure."""
        check_kernel_rows(self)
        check_metric_axioms(self)
        if self.invariant_measure is not None:
            check_invariant(self, self.invariant_measure)
        return self

    def __repr__(self):
        return "MetricModel(%s, %d states)" % (self.tag, self.num_states)


def check_kernel_rows(model):
    for i, row in enumerate(model.kernel):
        if not isinstance(row, DiscreteMeasure):
            raise ValueError("kernel row %d is not a DiscreteMeasure" % i)
        for s, _ in row:
            if not 0 <= s < model.num_states:
                raise ValueError("kernel row %d points to unknown state %d"
                                 % (i, s))
        mass = row.total_mass()
        if abs(mass - 1) > TOL:
            raise ValueError("kernel row %d: row mass ≠ 1 (got %s)"
                             % (i, mass))


def check_metric_axioms(model, tol=TOL):
    """Check the metric axioms on the model's distance matrix.

    Every triple is checked for up to ``EXHAUSTIVE_AXIOM_STATES`` states,
    a deterministic strided sample of triples above.
    """
    dist = model.distance_matrix()
    n = model.num_states
    if (dist < 0).any():
        i, j = (dist < 0).nonzero()[0].tolist()
        raise ValueError("metric negative between states %d and %d" % (i, j))
    asym = (dist - dist.t()).abs() > tol
    if asym.any():
        i, j = asym.nonzero()[0].tolist()
        raise ValueError("metric not symmetric between states %d and %d"
                         % (i, j))
    if dist.diag().abs().max().item() > tol:
        raise ValueError("metric has nonzero self distance")
    off = dist + torch.eye(n, dtype=torch.float64)
    if (off <= tol).any():
        i, j = (off <= tol).nonzero()[0].tolist()
        raise ValueError("metric does not separate states %d and %d"
                         % (i, j))
    if n <= EXHAUSTIVE_AXIOM_STATES:
        for j in range(n):
            via = dist[:, j:j + 1] + dist[j:j + 1, :]
            bad = dist > via + tol
            if bad.any():
                i, k = bad.nonzero()[0].tolist()
                raise ValueError("triangle inequality fails on (%d, %d, %d)"
                                 % (i, j, k))
    else:
        for i in range(n):
            j = (7 * i + 3) % n
            k = (13 * i + 5) % n
            if dist[i, k] > dist[i, j] + dist[j, k] + tol:
                raise ValueError("triangle inequality fails on (%d, %d, %d)"
                                 % (i, j, k))
        logger.debug("triangle inequality sampled on %d triples" % n)
    return True


def check_invariant(model, mu, tol=TOL):
    from eprop.operator.markov_operator import apply
    from eprop.measure import max_deviation

    if not mu.is_probability(tol):
        raise ValueError("invariant measure has mass %s" % mu.total_mass())
    dev = max_deviation(apply(model, mu), mu)
    if dev > tol:
        raise ValueError("invariant measure is not fixed by the kernel "
                         "(deviation %g)" % float(dev))
    return True


def distance(model, a, b):
    """Exact distance between two states of ``model``."""
    return model.distance(a, b)
