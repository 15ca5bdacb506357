"""Metric state spaces, built-in models and the model loader."""
from eprop.space.metric_model import (
    StateDescriptor, Metric, RealAbsMetric, SupNormMetric, ExplicitMetric,
    PrimeLadderMetric, Ball, MetricModel, distance, check_metric_axioms,
    check_kernel_rows, check_invariant)
from eprop.space.builders import (
    build_example1, build_example2, build_halfmap, build_doeblin,
    build_doeblin3, example2_state, solve_invariant, kernel_is_exact,
    is_prime)
from eprop.space.loader import (
    ModelLoadError, load_model, load_model_file, read_document)

str2builder = {
    "example1": lambda opt: build_example1(opt.m_max),
    "example2": lambda opt: build_example2(opt.primes),
    "doeblin3": lambda opt: build_doeblin3(),
    "halfmap": lambda opt: build_halfmap(opt.halfmap_depth),
}

__all__ = ["StateDescriptor", "Metric", "RealAbsMetric", "SupNormMetric",
           "ExplicitMetric", "PrimeLadderMetric", "Ball", "MetricModel",
           "distance", "check_metric_axioms", "check_kernel_rows",
           "check_invariant", "build_example1", "build_example2",
           "build_halfmap", "build_doeblin", "build_doeblin3",
           "example2_state", "solve_invariant", "kernel_is_exact",
           "is_prime", "ModelLoadError", "load_model", "load_model_file",
           "read_document", "str2builder"]
