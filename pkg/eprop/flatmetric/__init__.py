"""Exact flat (Fortet-Mourier) distance via a small dense simplex."""
from eprop.flatmetric.simplex import (
    SimplexCyclingError, SimplexTableau, simplex_max)
from eprop.flatmetric.flat_distance import (
    FlatMetricProblem, geodesic_pairs, solve_lp, flat_distance)

__all__ = ["SimplexCyclingError", "SimplexTableau", "simplex_max",
           "FlatMetricProblem", "geodesic_pairs", "solve_lp",
           "flat_distance"]
