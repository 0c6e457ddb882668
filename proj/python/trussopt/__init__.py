"""Truss sizing optimization with a hybrid simulated annealing / genetic algorithm."""

import json

from ._core import (
    Benchmark,
    ComparisonSummary,
    DimensionMismatch,
    GenerationRecord,
    ParseError,
    PenaltyParams,
    RunRecord,
    SingularStructure,
    TrussModel,
    ValidationError,
    acceptance_probability,
    analyze,
    builtin,
    builtin_ids,
    compare_plain_ga,
    design_report_json,
    penalty,
    run,
    structure_weight,
)


def design_report(model, areas, slack=0.0):
    """Weight, feasibility and every constraint margin as a dict."""
    return json.loads(design_report_json(model, areas, slack))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
