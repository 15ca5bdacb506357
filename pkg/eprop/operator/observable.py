# -*- coding: utf-8 -*-
"""Bounded Lipschitz observables on a model's state table."""
import os

import torch

from eprop.utils.misc import TOL, double_tensor


class Observable(object):
    """Function on states with a declared sup bound and Lipschitz constant.

    Args:
        values (torch.Tensor): ``(n,)`` float64 values, one per state.
        sup_bound (float): declared ``|f|``; defaults to ``max |values|``.
        lip_const (float or None): declared ``Lip f``; ``None`` when not
            declared (e.g. for iterates ``U^n f``).
        name (str): used in reports.
    """

    def __init__(self, values, sup_bound=None, lip_const=None, name="f"):
        if not torch.is_tensor(values):
            values = double_tensor(list(values))
        self.values = values.to(torch.float64)
        if sup_bound is None:
            sup_bound = self.values.abs().max().item() \
                if self.values.numel() else 0.0
        self.sup_bound = float(sup_bound)
        self.lip_const = None if lip_const is None else float(lip_const)
        self.name = name

    def __call__(self, state):
        return self.values[state].item()

    def __len__(self):
        return self.values.numel()

    def oscillation(self):
        return oscillation(self.values)

    def check(self, model, tol=TOL):
        """Verify the declared bounds on every state (pair) of ``model``.

        Raises:
            ValueError: a bound is violated.
        """
        if self.values.numel() != model.num_states:
            raise ValueError("observable '%s' has %d values for %d states"
                             % (self.name, self.values.numel(),
                                model.num_states))
        worst = self.values.abs().max().item()
        if worst > self.sup_bound + tol:
            raise ValueError("observable '%s' exceeds its sup bound %g (%g)"
                             % (self.name, self.sup_bound, worst))
        if self.lip_const is not None:
            lip = lipschitz_constant(model, self.values)
            if lip > self.lip_const + 1e-9:
                raise ValueError("observable '%s' exceeds its Lipschitz "
                                 "constant %g (%g)"
                                 % (self.name, self.lip_const, lip))
        return True

    def to_json(self):
        return {"values": {str(i): v for i, v in
                           enumerate(self.values.tolist())},
                "sup_bound": self.sup_bound,
                "lip_const": self.lip_const}

    def __repr__(self):
        return "Observable(%s, |f|=%g, Lip=%s)" % (
            self.name, self.sup_bound, self.lip_const)


def oscillation(values):
    """``max g - min g`` of a ``(n,)`` tensor."""
    return (values.max() - values.min()).item()


def lipschitz_constant(model, values):
    """Smallest ``L`` with ``|g(x) - g(y)| <= L d(x, y)`` on the model."""
    if values.numel() < 2:
        return 0.0
    dist = model.distance_matrix()
    diff = (values.unsqueeze(0) - values.unsqueeze(1)).abs()
    off = ~torch.eye(values.numel(), dtype=torch.bool)
    return (diff[off] / dist[off]).max().item()


def from_values(model, values, name="f"):
    """Observable whose bounds are read off its values."""
    values = values if torch.is_tensor(values) else double_tensor(list(values))
    return Observable(values, values.abs().max().item(),
                      lipschitz_constant(model, values), name=name)


def constant(model, c=1.0):
    values = torch.full((model.num_states,), float(c), dtype=torch.float64)
    return Observable(values, abs(float(c)), 0.0, name="constant")


def identity_on_norm(model):
    """``f(x) = ||x||``, the distance to the model's origin."""
    values = double_tensor([model.norm(s) for s in range(model.num_states)])
    return Observable(values, values.abs().max().item(), 1.0,
                      name="identity_on_norm")


def min1_2norm(model):
    """``f(x) = min(1, 2 ||x||)``."""
    values = double_tensor([min(1, 2 * model.norm(s))
                            for s in range(model.num_states)])
    return Observable(values, 1.0, 2.0, name="min1_2norm")


str2observable = {
    "identity_on_norm": identity_on_norm,
    "min1_2norm": min1_2norm,
    "constant": constant,
}


def observable_from_document(document, model):
    """Observable from ``{"values": {...}, "sup_bound", "lip_const"}``.

    States missing from ``values`` are rejected.
    """
    raw = document.get("values")
    if not isinstance(raw, dict):
        raise ValueError("observable document needs a 'values' object")
    values = []
    for s in range(model.num_states):
        if str(s) not in raw:
            raise ValueError("observable has no value for state %d" % s)
        values.append(float(raw[str(s)]))
    f = Observable(double_tensor(values), document.get("sup_bound"),
                   document.get("lip_const"),
                   name=document.get("name", "f"))
    f.check(model)
    return f


def load_observable(spec, model):
    """Resolve ``--f``: a built-in name, a document, or a document path."""
    from eprop.space.loader import read_document

    if isinstance(spec, dict):
        return observable_from_document(spec, model)
    if spec in str2observable:
        return str2observable[spec](model)
    if os.path.isfile(spec):
        return observable_from_document(read_document(spec), model)
    raise ValueError("unknown observable '%s' (expected one of %s or a file)"
                     % (spec, ", ".join(sorted(str2observable))))
