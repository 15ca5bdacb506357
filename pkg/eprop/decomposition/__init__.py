"""Measure decomposition and its verification."""
from eprop.decomposition.tree import (
    SearchHorizonError, PreconditionError, DecompositionConfig,
    DecompositionLevel, DecompositionTree)
from eprop.decomposition.construction import (
    DEFAULT_EPS, DEFAULT_N_SEARCH, choose_k, target_mass, select_alpha,
    validate_alpha, split_radius, default_config, decompose,
    decompose_along)
from eprop.decomposition.verification import (
    FLOAT_GATE, CLOSE, NOT_CLOSE_ENOUGH, PASS, FAIL, NOT_APPLICABLE,
    telescoped, verify_telescoping, telescoping_ok, continuity_scan,
    oscillation_bound, lemma_candidates, ContradictionReport,
    check_contradiction_bound)

__all__ = ["SearchHorizonError", "PreconditionError", "DecompositionConfig",
           "DecompositionLevel", "DecompositionTree", "DEFAULT_EPS",
           "DEFAULT_N_SEARCH", "choose_k", "target_mass", "select_alpha",
           "validate_alpha", "split_radius", "default_config", "decompose",
           "decompose_along", "FLOAT_GATE", "CLOSE", "NOT_CLOSE_ENOUGH",
           "PASS", "FAIL", "NOT_APPLICABLE", "telescoped",
           "verify_telescoping", "telescoping_ok", "continuity_scan",
           "oscillation_bound", "lemma_candidates", "ContradictionReport",
           "check_contradiction_bound"]
