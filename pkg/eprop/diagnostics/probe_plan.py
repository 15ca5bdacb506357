# -*- coding: utf-8 -*-
"""Probe ladders approaching a target state."""
from eprop.utils.misc import aeq


class ProbePlan(object):
    """Target ``z``, probes with strictly decreasing distance to ``z``, and
    the tail window ``[tail_start, horizon]`` over which gaps are taken.

    Args:
        target (int): the point ``z``.
        probes (list[int]): states approaching ``z``.
        horizon (int): last iterate ``N``.
        tail_start (int or None): first iterate ``N0`` of the window;
            ``None`` means ``max(1, N // 2)``.
        windows (list[(int, int)] or None): per-probe windows overriding
            ``[tail_start, horizon]``, e.g. ``(k, k)`` to evaluate a probe
            at one iterate only.
    """

    def __init__(self, target, probes, horizon, tail_start=None,
                 windows=None):
        if isinstance(horizon, bool) or not isinstance(horizon, int) \
                or horizon < 1:
            raise ValueError("horizon must be a positive integer, got %r"
                             % (horizon,))
        if tail_start is None or tail_start < 0:
            tail_start = max(1, horizon // 2)
        if not 1 <= tail_start <= horizon:
            raise ValueError("tail start %r must lie in [1, %d]"
                             % (tail_start, horizon))
        if not probes:
            raise ValueError("probe plan needs at least one probe")
        self.target = target
        self.probes = list(probes)
        self.horizon = horizon
        self.tail_start = tail_start
        if windows is not None:
            aeq(len(windows), len(self.probes))
            for lo, hi in windows:
                if not 1 <= lo <= hi:
                    raise ValueError("invalid probe window (%r, %r)"
                                     % (lo, hi))
            windows = [tuple(w) for w in windows]
        self.windows = windows

    def window(self, index):
        if self.windows is None:
            return self.tail_start, self.horizon
        return self.windows[index]

    def last_step(self):
        if self.windows is None:
            return self.horizon
        return max(hi for _, hi in self.windows)

    def validate(self, model):
        """Check ids and the strictly decreasing distance ladder."""
        model.check_state(self.target)
        previous = None
        for x in self.probes:
            model.check_state(x)
            d = model.distance(x, self.target)
            if previous is not None and not d < previous:
                raise ValueError("probe %s does not approach %s: distance "
                                 "%s after %s" % (model.label(x),
                                                  model.label(self.target),
                                                  d, previous))
            previous = d
        return self

    def to_json(self):
        return {"target": self.target, "probes": self.probes,
                "horizon": self.horizon, "tail_start": self.tail_start,
                "windows": self.windows}


def ladder_towards(model, target, states=None):
    """Probes ordered by decreasing distance to ``target``.

    Equal distances keep the smallest state id only, so the ladder is
    strictly decreasing.
    """
    if states is None:
        states = range(model.num_states)
    by_distance = {}
    for s in states:
        if s == target:
            continue
        d = model.distance(s, target)
        if d not in by_distance or s < by_distance[d]:
            by_distance[d] = s
    return [by_distance[d] for d in sorted(by_distance, reverse=True)]


def default_probe_plan(model, target=None, horizon=200, tail_start=None,
                       cesaro=False):
    """Auto-generated ladders for built-in models.

    * ``example1``: the points ``1/m`` for ``m >= 5``, descending.
    * ``example2``: the states ``(p, 1)`` in prime order; for Cesàro
      profiles each probe is evaluated at ``n = p``.
    * anything else: every state, by decreasing distance to the target.
    """
    if target is None:
        target = model.origin
    windows = None
    if model.tag == "example1" and target == model.origin:
        probes = list(range(5, model.num_states))
    elif model.tag == "example2" and target == model.origin:
        probes = []
        primes = []
        for st in model.states:
            if st.key is not None and st.key[1] == 1:
                probes.append(st.state_id)
                primes.append(st.key[0])
        order = sorted(range(len(probes)), key=lambda i: primes[i])
        probes = [probes[i] for i in order]
        primes = [primes[i] for i in order]
        if cesaro:
            windows = [(p, p) for p in primes]
            horizon = max(horizon, max(primes))
    else:
        probes = ladder_towards(model, target)
    return ProbePlan(target, probes, horizon, tail_start, windows)
