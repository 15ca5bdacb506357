# -*- coding: utf-8 -*-
from fractions import Fraction
from numbers import Integral

import torch

# Global comparison tolerance for masses and weights.
TOL = 1e-12


def aeq(*args):
    """
    Assert all arguments have the same value
    """
    arguments = (arg for arg in args)
    first = next(arguments)
    assert all(arg == first for arg in arguments), \
        "Not all arguments have the same value: " + str(args)


def is_exact(value):
    """True for ints and Fractions (bools excluded)."""
    return isinstance(value, (Fraction, Integral)) \
        and not isinstance(value, bool)


def as_exact(value):
    """Convert a decimal string, int or Fraction to a Fraction.

    Floats are converted through their shortest repr so that ``0.1``
    becomes ``1/10`` rather than its binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def format_float(value):
    """Locale independent rendering with 12 significant digits."""
    return "%.12g" % float(value)


def double_tensor(values):
    """Build a float64 tensor from nested lists of python numbers.

    Args:
        values (list): a flat list ``(n,)`` or a list of rows ``(n, m)``,
            entries may be ints, floats or Fractions.

    Returns:
        torch.Tensor: ``(n,)`` or ``(n, m)`` float64 tensor.
    """
    if values and isinstance(values[0], (list, tuple)):
        return torch.tensor([[float(v) for v in row] for row in values],
                            dtype=torch.float64)
    return torch.tensor([float(v) for v in values], dtype=torch.float64)
