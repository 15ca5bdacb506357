# -*- coding: utf-8 -*-
"""Built-in models.

``example1`` and ``example2`` are exact truncations of the two countable
counterexamples: every trajectory is absorbed at the zero state inside the
truncation, so no approximation error is introduced. ``doeblin3`` and
``halfmap`` are positive controls.
"""
from fractions import Fraction

import torch

from eprop.measure import DiscreteMeasure, dirac
from eprop.space.metric_model import (
    StateDescriptor, MetricModel, RealAbsMetric, ExplicitMetric,
    PrimeLadderMetric, check_kernel_rows, check_metric_axioms)
from eprop.utils.logging import logger
from eprop.utils.misc import TOL, double_tensor


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def build_example1(m_max):
    """States ``{0} ∪ {1/m : 1 <= m <= m_max}`` with ``|x - y|``.

    ``T(0) = T(1) = 0`` and ``T(1/m) = 1/(m-1)``. State id ``0`` is the
    point ``0`` and state id ``m`` is the point ``1/m``.
    """
    if isinstance(m_max, bool) or not isinstance(m_max, int) or m_max < 2:
        raise ValueError("example1 needs an integer m_max >= 2, got %r"
                         % (m_max,))
    states = [StateDescriptor(0, "0", coords=[Fraction(0)])]
    for m in range(1, m_max + 1):
        states.append(StateDescriptor(m, "1/%d" % m, coords=[Fraction(1, m)]))
    kernel = [dirac(0), dirac(0)]
    kernel += [dirac(m - 1) for m in range(2, m_max + 1)]
    model = MetricModel(states, RealAbsMetric(), kernel, "example1",
                        invariant_measure=dirac(0), origin=0,
                        truncated=True)
    logger.debug("built example1 with m_max=%d" % m_max)
    return model


def build_example2(primes):
    """Singleton sequences ``i/p`` at position ``p**i - 1`` in ``l^inf``.

    The zero state (id ``0``) stands for every ``(p, 0)``. For each prime in
    the given order the states ``(p, 1) .. (p, p)`` follow. The kernel moves
    ``(p, i)`` to ``(p, i+1)`` and ``(p, p)`` and zero to zero.
    """
    primes = list(primes)
    if not primes:
        raise ValueError("example2 needs at least one prime")
    if len(set(primes)) != len(primes):
        raise ValueError("example2 primes must be distinct: %r" % (primes,))
    for p in primes:
        if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
            raise ValueError("example2 entry %r is not a prime" % (p,))
    states = [StateDescriptor(0, "zero", coords=[Fraction(0)], key=(0, 0))]
    kernel = [dirac(0)]
    for p in primes:
        first = len(states)
        for i in range(1, p + 1):
            sid = len(states)
            states.append(StateDescriptor(
                sid, "(%d,%d)" % (p, i), coords=[Fraction(i, p)], key=(p, i)))
            kernel.append(dirac(sid + 1) if i < p else dirac(0))
        logger.debug("example2 prime %d occupies ids %d..%d"
                     % (p, first, len(states) - 1))
    return MetricModel(states, PrimeLadderMetric(), kernel, "example2",
                       invariant_measure=dirac(0), origin=0, truncated=True)


def example2_state(model, p, i):
    """Id of the state ``(p, i)`` of an example2 model (``i = 0``: zero)."""
    if i == 0:
        return 0
    for st in model.states:
        if st.key == (p, i):
            return st.state_id
    raise ValueError("no state (%d, %d) in %s" % (p, i, model.tag))


def build_halfmap(depth):
    """Control model ``T(x) = x/2`` on ``{2^-j : 0 <= j <= depth} ∪ {0}``.

    State id ``0`` is the point ``0``, id ``j + 1`` the point ``2^-j``; the
    last point ``2^-depth`` is sent to ``0``.
    """
    if isinstance(depth, bool) or not isinstance(depth, int) or depth < 1:
        raise ValueError("halfmap needs depth >= 1, got %r" % (depth,))
    states = [StateDescriptor(0, "0", coords=[Fraction(0)])]
    for j in range(depth + 1):
        states.append(StateDescriptor(j + 1, "2^-%d" % j,
                                      coords=[Fraction(1, 2 ** j)]))
    kernel = [dirac(0)]
    kernel += [dirac(j + 2) for j in range(depth)]
    kernel.append(dirac(0))
    return MetricModel(states, RealAbsMetric(), kernel, "halfmap",
                       invariant_measure=dirac(0), origin=0, truncated=True)


def solve_invariant(matrix):
    """Solve ``mu P = mu`` with ``sum(mu) = 1`` by a direct linear solve.

    Args:
        matrix (torch.Tensor): ``(n, n)`` row-stochastic float64 tensor.

    Returns:
        torch.Tensor: ``(n,)`` invariant probability vector.
    """
    n = matrix.size(0)
    system = matrix.t() - torch.eye(n, dtype=torch.float64)
    system[-1] = 1.0
    rhs = torch.zeros(n, dtype=torch.float64)
    rhs[-1] = 1.0
    weights = torch.linalg.solve(system, rhs)
    # the solve can leave -1e-17 dust on structurally zero entries
    weights = weights.clamp(min=0.0)
    return weights / weights.sum()


def invariant_measure_of(matrix):
    weights = solve_invariant(matrix).tolist()
    return DiscreteMeasure((i, w) for i, w in enumerate(weights) if w > 0)


def build_doeblin(matrix, metric, tag="doeblin", labels=None):
    """Finite chain from a row-stochastic matrix and an explicit metric.

    Entries may be Fractions, in which case kernel rows stay exact. The
    invariant measure is solved, not iterated.
    """
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise ValueError("transition matrix must be square and nonempty")
    if len(metric) != n or any(len(row) != n for row in metric):
        raise ValueError("metric matrix must be %d x %d" % (n, n))
    for i, row in enumerate(matrix):
        if any(p != p or p < 0 for p in row):
            raise ValueError("transition matrix row %d has a negative entry"
                             % i)
        mass = sum(row, 0)
        if abs(mass - 1) > TOL:
            raise ValueError("transition matrix row %d: row mass ≠ 1 "
                             "(got %s)" % (i, mass))
    labels = labels or [str(i) for i in range(n)]
    states = [StateDescriptor(i, labels[i]) for i in range(n)]
    kernel = [DiscreteMeasure((j, p) for j, p in enumerate(row))
              for row in matrix]
    model = MetricModel(states, ExplicitMetric(metric), kernel, tag)
    check_kernel_rows(model)
    check_metric_axioms(model)
    model.invariant_measure = invariant_measure_of(
        double_tensor([list(row) for row in matrix]))
    logger.debug("%s invariant measure %r" % (tag, model.invariant_measure))
    return model


def build_doeblin3():
    """Three-state chain with entries 0.8 / 0.1 and ``d(i, j) = |i-j|/2``.

    Its Dobrushin coefficient is ``0.7``.
    """
    hi, lo = Fraction(8, 10), Fraction(1, 10)
    matrix = [[hi, lo, lo], [lo, hi, lo], [lo, lo, hi]]
    metric = [[Fraction(abs(i - j), 2) for j in range(3)] for i in range(3)]
    return build_doeblin(matrix, metric, tag="doeblin3")


def kernel_is_exact(model):
    """True when every kernel weight is rational."""
    return all(row.is_exact() for row in model.kernel)
