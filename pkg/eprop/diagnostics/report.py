# -*- coding: utf-8 -*-
"""Diagnostic reports and horizon-relative verdicts."""
import math

from eprop.utils.misc import aeq, format_float

HOLDS = "HOLDS-AT-HORIZON"
FAILS = "FAILS"
INCONCLUSIVE = "INCONCLUSIVE"

# Verdict tolerance for gaps and traces.
DEFAULT_TOL = 1e-6


class Verdict(object):
    """Outcome of a profile; ``value`` is the gap floor ``g`` of a failure."""

    def __init__(self, kind, value=None):
        if kind not in (HOLDS, FAILS, INCONCLUSIVE):
            raise ValueError("unknown verdict kind %r" % (kind,))
        self.kind = kind
        self.value = value

    @property
    def holds(self):
        return self.kind == HOLDS

    @property
    def fails(self):
        return self.kind == FAILS

    def __eq__(self, other):
        return isinstance(other, Verdict) and self.kind == other.kind \
            and self.value == other.value

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.kind, self.value))

    def __str__(self):
        if self.kind == FAILS:
            return "%s(%.6g)" % (FAILS, self.value)
        return self.kind

    __repr__ = __str__


def gap_verdict(gaps, distances=None, tol=DEFAULT_TOL):
    """Verdict from gaps ordered by decreasing probe distance.

    Only the closest ``ceil(len / 2)`` probes (the tail of the ladder) are
    looked at. Every tail gap within ``tol``: holds at horizon. The smallest
    tail gap ``g`` above ``tol`` while the closest probe keeps at least half
    the first tail gap: fails with ``g``. Anything else is inconclusive.

    With ``distances`` given, failing also needs the gaps to outlast the
    distances: the tail gap ratio ``gap_last / gap_first`` must reach
    halfway from the distance ratio ``d_last / d_first`` to ``1``. Gaps
    shrinking in proportion to the probe distance are inconclusive.
    """
    if not gaps:
        return Verdict(INCONCLUSIVE)
    start = len(gaps) // 2
    tail = list(gaps[start:])
    if max(tail) <= tol:
        return Verdict(HOLDS)
    floor = min(tail)
    if not (floor > tol and tail[-1] >= 0.5 * tail[0]):
        return Verdict(INCONCLUSIVE)
    if distances is not None:
        aeq(len(distances), len(gaps))
        near, far = float(distances[-1]), float(distances[start])
        if far > 0:
            ratio = near / far
            if tail[-1] < tail[0] * (ratio + 0.5 * (1.0 - ratio)):
                return Verdict(INCONCLUSIVE)
    return Verdict(FAILS, floor)


def trace_verdict(values, tol=DEFAULT_TOL):
    """Holds when the last value of a convergence trace is within ``tol``."""
    if not values:
        return Verdict(INCONCLUSIVE)
    return Verdict(HOLDS) if values[-1] <= tol else Verdict(INCONCLUSIVE)


class DiagnosticReport(object):
    """Rows of one profile with the verdict and the parameters used.

    Args:
        profile (str): ``eproperty``, ``cesaro``, ``stability``, ...
        columns (list[str]): header of ``rows``.
        rows (list[tuple]): one tuple per probe (or iterate).
        verdict (Verdict or None): ``None`` for profiles without one.
        horizon (int or None): last iterate used.
        params (dict): parameters echoed in the JSON report.
        notes (list[str]): human-readable remarks, e.g. skipped balls.
    """

    def __init__(self, profile, columns, rows, verdict=None, horizon=None,
                 params=None, notes=None):
        self.profile = profile
        self.columns = list(columns)
        self.rows = [tuple(r) for r in rows]
        for r in self.rows:
            if len(r) != len(self.columns):
                raise ValueError("report row %r does not match columns %r"
                                 % (r, self.columns))
        self.verdict = verdict
        self.horizon = horizon
        self.params = dict(params or {})
        self.notes = list(notes or [])

    def column(self, name):
        i = self.columns.index(name)
        return [r[i] for r in self.rows]

    @property
    def gaps(self):
        return self.column("gap")

    def to_csv_rows(self):
        """Header plus rows rendered with 12 significant digits."""
        out = [list(self.columns)]
        for r in self.rows:
            out.append([_render(v) for v in r])
        return out

    def to_json(self):
        return {
            "profile": self.profile,
            "verdict": None if self.verdict is None else str(self.verdict),
            "horizon": self.horizon,
            "params": self.params,
            "notes": self.notes,
            "columns": self.columns,
            "rows": [[_jsonable(v) for v in r] for r in self.rows],
        }

    def summary(self):
        text = "%s: %d rows" % (self.profile, len(self.rows))
        if self.verdict is not None:
            text += ", verdict %s" % self.verdict
        if self.horizon is not None:
            text += " (horizon %d)" % self.horizon
        return text


def _render(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float) or hasattr(value, "denominator"):
        return format_float(value)
    return str(value)


def _jsonable(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    value = float(value)
    return None if math.isnan(value) else value
