"""Finite-horizon diagnostics and their reports."""
from eprop.diagnostics.probe_plan import (
    ProbePlan, ladder_towards, default_probe_plan)
from eprop.diagnostics.report import (
    HOLDS, FAILS, INCONCLUSIVE, DEFAULT_TOL, Verdict, DiagnosticReport,
    gap_verdict, trace_verdict)
from eprop.diagnostics.profiles import (
    measure_vector, vector_measure, eproperty_profile, cesaro_series,
    cesaro_profile, stability_trace, stability_report, absorption_time,
    stability_scan, liminf_ball_mass, settling_times)
from eprop.diagnostics.lemma_ball import (
    LemmaBallSearch, default_candidate_balls, find_lemma_ball)

__all__ = ["ProbePlan", "ladder_towards", "default_probe_plan", "HOLDS",
           "FAILS", "INCONCLUSIVE", "DEFAULT_TOL", "Verdict",
           "DiagnosticReport", "gap_verdict", "trace_verdict",
           "measure_vector", "vector_measure", "eproperty_profile",
           "cesaro_series", "cesaro_profile", "stability_trace",
           "stability_report", "absorption_time", "stability_scan",
           "liminf_ball_mass", "settling_times", "LemmaBallSearch",
           "default_candidate_balls", "find_lemma_ball"]
