"""Minimum sum coloring with bundles: exact solvers, reductions, tooling."""

from mscb.core import (
    Bundle,
    Graph,
    Instance,
    InstanceClass,
    MSCBError,
    SolveResult,
    classify,
    cost,
    validate_instance,
)
from mscb.dispatch import dispatch
from mscb.io import emit, parse

__all__ = [
    "Bundle",
    "Graph",
    "Instance",
    "InstanceClass",
    "MSCBError",
    "SolveResult",
    "classify",
    "cost",
    "dispatch",
    "emit",
    "parse",
    "validate_instance",
]
