# -*- coding: utf-8 -*-
"""Search for a ball inside ``supp mu*`` on which ``U^n f`` settles."""
from eprop.measure import support
from eprop.operator import dual_orbit
from eprop.space import Ball
from eprop.utils.logging import logger


class LemmaBallSearch(object):
    """Result of :func:`find_lemma_ball`.

    ``ball`` is ``None`` when no candidate qualified; ``start`` is the
    smallest ``N`` and ``oscillation`` the largest spread of ``U^n f`` on
    the ball over ``[start, n_max]``.
    """

    def __init__(self, ball=None, start=None, oscillation=None, n_max=None,
                 notes=None):
        self.ball = ball
        self.start = start
        self.oscillation = oscillation
        self.n_max = n_max
        self.notes = list(notes or [])

    @property
    def found(self):
        return self.ball is not None

    def to_json(self):
        return {"ball": None if self.ball is None else self.ball.to_json(),
                "start": self.start, "oscillation": self.oscillation,
                "n_max": self.n_max, "notes": self.notes}


def default_candidate_balls(model):
    """Balls centred at the atoms of ``mu*``.

    Radii sit at midpoints between consecutive distinct realized distances
    from the centre (``0`` included), followed by one radius enclosing the
    whole model.
    """
    target = model.invariant_measure
    balls = []
    for center in sorted(support(target)):
        dists = model.realized_distances(center)
        for lo, hi in zip(dists, dists[1:]):
            balls.append(Ball(center, (lo + hi) / 2))
        balls.append(Ball(center, dists[-1] + 1))
    return balls


def find_lemma_ball(model, f, eps, candidate_balls=None, n_max=200):
    """First candidate ``B`` inside ``supp mu*`` with a smallest ``N`` such
    that ``|U^n f(x) - U^n f(y)| <= eps`` for ``x, y`` in ``B`` and
    ``N <= n <= n_max``.

    Balls leaving the support are skipped with a note. On truncated models
    a ball holding a single state is skipped too: its centre is a limit of
    states beyond the truncation, so the ball is not open in the full space.

    Returns:
        LemmaBallSearch
    """
    if model.invariant_measure is None:
        raise ValueError("model '%s' has no invariant measure" % model.tag)
    if not eps > 0:
        raise ValueError("eps must be positive, got %r" % (eps,))
    if n_max < 1:
        raise ValueError("n_max must be at least 1, got %r" % (n_max,))
    if candidate_balls is None:
        candidate_balls = default_candidate_balls(model)
    supp = support(model.invariant_measure)
    orbit = dual_orbit(model, f, n_max)
    notes = []
    for ball in candidate_balls:
        members = ball.members(model)
        if not set(members) <= supp:
            notes.append("%r skipped: not inside supp mu*" % (ball,))
            continue
        if model.truncated and len(members) == 1:
            notes.append("%r skipped: singleton ball of a truncated model"
                         % (ball,))
            continue
        values = orbit[1:, members]
        spread = values.max(1)[0] - values.min(1)[0]
        # suffix[j] = max spread over n = j+1 .. n_max
        suffix = spread.flip(0).cummax(0)[0].flip(0)
        ok = (suffix <= eps).nonzero().view(-1)
        if ok.numel() == 0:
            notes.append("%r skipped: oscillation above %g up to n = %d"
                         % (ball, eps, n_max))
            continue
        j = ok[0].item()
        logger.info("lemma ball %r settles from N = %d" % (ball, j + 1))
        return LemmaBallSearch(ball, j + 1, suffix[j].item(), n_max, notes)
    logger.info("no lemma ball among %d candidates on %s"
                % (len(candidate_balls), model.tag))
    return LemmaBallSearch(None, None, None, n_max, notes)
