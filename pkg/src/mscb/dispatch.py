"""Pick the most specific exact solver for an instance."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from mscb.bipartite import solve_bipartite_three_uniform, solve_bipartite_two
from mscb.capvector import solve_capvector
from mscb.core import (
    Instance,
    InstanceClass,
    SolveResult,
    UnsupportedInstanceError,
    classify,
    require_valid,
    verify_result,
)
from mscb.oracle import OracleConfig, solve_bruteforce
from mscb.tree_solvers import solve_connected_partition_tree, solve_connected_path, solve_xp_tree


class NoSolverError(UnsupportedInstanceError):
    pass


@dataclass(frozen=True)
class DispatchLimits:
    """Size guards for the solvers whose running time is not polynomial.

    ``xp_work`` bounds the estimated number of cap vectors times ``n`` for the
    tree partition solver; ``capvector_bundles`` bounds the family size for
    the cap-vector search; the brute-force oracle is tried only up to
    ``oracle_n`` vertices and ``oracle_nodes`` search nodes.
    """

    xp_work: int = 5_000_000
    capvector_bundles: int = 5
    oracle_n: int = 40
    oracle_nodes: int = 20_000_000


SOLVERS: dict[str, Callable[[Instance], SolveResult]] = {
    "oracle": solve_bruteforce,
    "capvector": solve_capvector,
    "xp-tree": solve_xp_tree,
    "connected-tree": solve_connected_partition_tree,
    "connected-path": solve_connected_path,
    "bip2": solve_bipartite_two,
    "bip3u": solve_bipartite_three_uniform,
}


def xp_vectors(instance: Instance) -> int:
    """Number of cap vectors the tree partition solver will enumerate."""
    g = instance.graph
    ell = len(instance.bundles)
    total = 1
    for b in instance.bundles:
        if len(b) >= 2:
            total *= min(2 * ell, max(g.degree(v) + 1 for v in b.members))
    return total


def choose(instance: Instance, info: InstanceClass, limits: DispatchLimits) -> str:
    if info.is_path and info.bundles_connected:
        return "connected-path"
    if info.is_tree and info.bundles_partition and info.bundles_connected:
        return "connected-tree"
    if info.is_tree and info.bundles_partition and xp_vectors(instance) * info.n <= limits.xp_work:
        return "xp-tree"
    if info.is_tree and info.bundle_count <= limits.capvector_bundles:
        return "capvector"
    if info.is_bipartite and info.bundle_count <= 2:
        return "bip2"
    if info.is_bipartite and info.bundle_count <= 3 and info.weights_uniform:
        return "bip3u"
    if info.n <= limits.oracle_n:
        return "oracle"
    raise NoSolverError(
        f"no applicable exact solver for n={info.n}, {info.bundle_count} bundles"
        f" (tree={info.is_tree}, bipartite={info.is_bipartite}, partition={info.bundles_partition})"
    )


def dispatch(
    instance: Instance, algo: str = "auto", limits: DispatchLimits | None = None
) -> SolveResult:
    """Solve with ``algo`` (or the best match when ``auto``) and verify the witness."""
    require_valid(instance)
    limits = limits or DispatchLimits()
    name = choose(instance, classify(instance), limits) if algo == "auto" else algo
    if name not in SOLVERS:
        raise ValueError(f"unknown solver {name!r}")
    if name == "oracle":
        result = solve_bruteforce(instance, OracleConfig(node_limit=limits.oracle_nodes))
    else:
        result = SOLVERS[name](instance)
    verify_result(instance, result)
    return result
