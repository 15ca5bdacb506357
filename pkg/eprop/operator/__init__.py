"""Markov operator, dual operator and observables."""
from eprop.operator.observable import (
    Observable, oscillation, lipschitz_constant, from_values, constant,
    identity_on_norm, min1_2norm, str2observable, load_observable)
from eprop.operator.markov_operator import (
    DEFAULT_HORIZON_CAP, apply, iterate, trajectory, dual_apply,
    dual_iterate, dual_orbit, cesaro_average, dobrushin_coefficient,
    feller_table)

__all__ = ["Observable", "oscillation", "lipschitz_constant", "from_values",
           "constant", "identity_on_norm", "min1_2norm", "str2observable",
           "load_observable", "DEFAULT_HORIZON_CAP", "apply", "iterate",
           "trajectory", "dual_apply", "dual_iterate", "dual_orbit",
           "cesaro_average", "dobrushin_coefficient", "feller_table"]
