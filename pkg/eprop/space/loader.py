# -*- coding: utf-8 -*-
"""Load user models from JSON / YAML documents.

Document layout::

    {"name": str,
     "states": [{"id": int, "label": str, "coords": [float]?}],
     "metric": {"kind": "explicit" | "coords_linf" | "real_abs",
                "matrix": [[float]]?},
     "kernel": [{"from": int, "to": [{"state": int, "p": float}]}],
     "invariant": [{"state": int, "w": float}]?}

JSON decimals are read as exact rationals, so a kernel written as
``0.1`` / ``0.9`` keeps the decomposition in exact arithmetic.
"""
import io
import json
import math
from fractions import Fraction
from numbers import Number

import yaml

from eprop.measure import DiscreteMeasure
from eprop.space.builders import invariant_measure_of
from eprop.space.metric_model import (
    StateDescriptor, MetricModel, ExplicitMetric, RealAbsMetric,
    SupNormMetric, check_metric_axioms, check_invariant)
from eprop.utils.logging import logger
from eprop.utils.misc import TOL, as_exact

METRIC_KINDS = ("explicit", "coords_linf", "real_abs")


class ModelLoadError(ValueError):
    pass


def _number(value, where):
    if isinstance(value, bool) or not isinstance(value, Number):
        raise ModelLoadError("%s: expected a number, got %r" % (where, value))
    if isinstance(value, float) and (math.isnan(value) or math.isinf(value)):
        raise ModelLoadError("%s: NaN or infinite value" % where)
    if value < 0:
        raise ModelLoadError("%s: negative value %s" % (where, value))
    return as_exact(value) if isinstance(value, float) else value


def _require(doc, key, kind, where):
    if not isinstance(doc, dict):
        raise ModelLoadError("%s: must be an object, got %r" % (where, doc))
    if key not in doc:
        raise ModelLoadError("%s: missing '%s'" % (where, key))
    if not isinstance(doc[key], kind):
        raise ModelLoadError("%s: '%s' has the wrong type" % (where, key))
    return doc[key]


def _reject_constant(name):
    raise ModelLoadError("non-finite constant %s in model document" % name)


def load_model(document):
    """Validate a model document and build the :class:`MetricModel`.

    Args:
        document (dict): parsed model document.

    Raises:
        ModelLoadError: schema violation, non-stochastic row or metric-axiom
            violation, naming the offending state or row.
    """
    if not isinstance(document, dict):
        raise ModelLoadError("model document must be an object")
    name = _require(document, "name", str, "model")
    raw_states = _require(document, "states", list, name)
    if not raw_states:
        raise ModelLoadError("%s: no states" % name)
    n = len(raw_states)

    metric_doc = _require(document, "metric", dict, name)
    kind = _require(metric_doc, "kind", str, "metric")
    if kind not in METRIC_KINDS:
        raise ModelLoadError("metric: unknown kind '%s'" % kind)

    states = [None] * n
    for pos, st in enumerate(raw_states):
        where = "state #%d" % pos
        if not isinstance(st, dict):
            raise ModelLoadError("%s: must be an object" % where)
        sid = _require(st, "id", int, where)
        if not 0 <= sid < n or states[sid] is not None:
            raise ModelLoadError("%s: id %r is out of range or repeated"
                                 % (where, sid))
        coords = st.get("coords")
        if kind != "explicit":
            if not isinstance(coords, list) or not coords:
                raise ModelLoadError("state %d: '%s' metric needs coords"
                                     % (sid, kind))
            if kind == "real_abs" and len(coords) != 1:
                raise ModelLoadError("state %d: real_abs needs exactly one "
                                     "coordinate" % sid)
            coords = [_signed(c, "state %d coords" % sid) for c in coords]
        states[sid] = StateDescriptor(sid, str(st.get("label", sid)),
                                      coords=coords)

    if kind == "explicit":
        matrix = _require(metric_doc, "matrix", list, "metric")
        if len(matrix) != n or any(not isinstance(r, list) or len(r) != n
                                   for r in matrix):
            raise ModelLoadError("metric: matrix must be %d x %d" % (n, n))
        matrix = [[_number(v, "metric row %d" % i) for v in row]
                  for i, row in enumerate(matrix)]
        metric = ExplicitMetric(matrix)
    elif kind == "coords_linf":
        metric = SupNormMetric()
    else:
        metric = RealAbsMetric()

    kernel = [None] * n
    for pos, row_doc in enumerate(_require(document, "kernel", list, name)):
        where = "kernel row #%d" % pos
        if not isinstance(row_doc, dict):
            raise ModelLoadError("%s: must be an object" % where)
        src = _require(row_doc, "from", int, where)
        if not 0 <= src < n or kernel[src] is not None:
            raise ModelLoadError("%s: 'from' %r is out of range or repeated"
                                 % (where, src))
        atoms = {}
        for entry in _require(row_doc, "to", list, where):
            dst = _require(entry, "state", int, "row %d" % src)
            if not 0 <= dst < n:
                raise ModelLoadError("row %d: unknown target state %d"
                                     % (src, dst))
            p = _number(_require(entry, "p", Number, "row %d" % src),
                        "row %d" % src)
            atoms[dst] = atoms.get(dst, 0) + p
        row = DiscreteMeasure(atoms)
        mass = row.total_mass()
        if abs(mass - 1) > TOL:
            raise ModelLoadError("row %d: row mass ≠ 1 (got %s)"
                                 % (src, float(mass)))
        kernel[src] = row
    missing = [i for i, row in enumerate(kernel) if row is None]
    if missing:
        raise ModelLoadError("kernel: no row for state %d" % missing[0])

    model = MetricModel(states, metric, kernel, name)
    try:
        check_metric_axioms(model)
    except ValueError as err:
        raise ModelLoadError("metric: %s" % err)

    if "invariant" in document:
        inv = DiscreteMeasure(
            (_require(a, "state", int, "invariant"),
             _number(_require(a, "w", Number, "invariant"), "invariant"))
            for a in _require(document, "invariant", list, name))
        try:
            check_invariant(model, inv)
        except ValueError as err:
            raise ModelLoadError("invariant: %s" % err)
        model.invariant_measure = inv
    else:
        try:
            model.invariant_measure = invariant_measure_of(
                model.transition_matrix())
        except RuntimeError:
            logger.warning("Model '%s': invariant measure is not unique, "
                           "stability diagnostics are unavailable." % name)
    logger.info("Loaded model '%s' with %d states (%s metric)."
                % (name, n, kind))
    return model


def _signed(value, where):
    if isinstance(value, bool) or not isinstance(value, Number):
        raise ModelLoadError("%s: expected a number, got %r" % (where, value))
    if isinstance(value, float) and (math.isnan(value) or math.isinf(value)):
        raise ModelLoadError("%s: NaN or infinite value" % where)
    return as_exact(value) if isinstance(value, float) else value


def read_document(path):
    """Read a JSON or YAML document; JSON decimals become Fractions."""
    with io.open(path, "r", encoding="utf-8") as f:
        if path.endswith((".yml", ".yaml")):
            return yaml.safe_load(f)
        return json.load(f, parse_float=Fraction,
                         parse_constant=_reject_constant)


def load_model_file(path):
    return load_model(read_document(path))
