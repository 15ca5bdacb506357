""" Main entry point of the eprop library """
from __future__ import division, print_function

import eprop.utils
import eprop.space
import eprop.measure
import eprop.operator
import eprop.flatmetric
import eprop.diagnostics
import eprop.decomposition

# For Flake
__all__ = [eprop.utils, eprop.space, eprop.measure, eprop.operator,
           eprop.flatmetric, eprop.diagnostics, eprop.decomposition]

__version__ = "0.1.0"
