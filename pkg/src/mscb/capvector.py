"""Cap-vector scheme for a bounded number of bundles.

Every optimal coloring uses colors at most ``chi(G) * l``. So the optimum is
the cheapest vector of per-bundle caps ``(k_1, ..., k_l)`` inside that
range for which some proper coloring keeps every bundle under its cap.

Cap feasibility is decided directly: a bottom-up DP when the graph is a
tree, plain backtracking otherwise. The property being decided is

    exists C_1..C_p partitioning V into independent sets such that
    for every j and every v in B_j, v lies in some C_i with i <= k_j.
"""

from __future__ import annotations

import heapq
import time
from typing import Sequence

from mscb.core import (
    InconclusiveError,
    Instance,
    SolveResult,
    UnsupportedInstanceError,
    make_result,
    require_valid,
)
from mscb.core import Graph
from mscb.tree_solvers import rooted_tree

CapVector = tuple[int, ...]


def degeneracy(graph: Graph) -> int:
    """Largest minimum degree seen while repeatedly deleting a min-degree vertex."""
    deg = [graph.degree(v) for v in range(graph.n)]
    alive = [True] * graph.n
    best = 0
    for _ in range(graph.n):
        v = min((x for x in range(graph.n) if alive[x]), key=lambda x: (deg[x], x))
        best = max(best, deg[v])
        alive[v] = False
        for u in graph.adjacency[v]:
            if alive[u]:
                deg[u] -= 1
    return best


def chromatic_upper_bound(graph: Graph) -> int:
    if not graph.edges:
        return 1
    if graph.two_coloring() is not None:
        return 2
    return degeneracy(graph) + 1


def color_bound(instance: Instance) -> int:
    return chromatic_upper_bound(instance.graph) * len(instance.bundles)


def vertex_caps(instance: Instance, caps: Sequence[int]) -> list[int]:
    """Per-vertex cap: the smallest cap among the bundles holding the vertex."""
    if len(caps) != len(instance.bundles):
        raise ValueError(f"expected {len(instance.bundles)} caps, got {len(caps)}")
    g = instance.graph
    out = []
    for v in range(g.n):
        js = instance.bundles_of[v]
        out.append(min(caps[j] for j in js) if js else g.degree(v) + 1)
    return out


def cap_feasible_tree(instance: Instance, caps: Sequence[int]) -> tuple[int, ...] | None:
    """Witness coloring of a tree that respects every bundle cap, or None."""
    g = instance.graph
    tree = rooted_tree(g, 0)
    limit = [min(c, g.degree(v) + 1) for v, c in enumerate(vertex_caps(instance, caps))]
    allowed: list[list[int]] = [[] for _ in range(g.n)]
    for v in tree.postorder:
        banned = set()
        for u in tree.children[v]:
            if not allowed[u]:
                return None
            if len(allowed[u]) == 1:
                banned.add(allowed[u][0])
        allowed[v] = [k for k in range(1, limit[v] + 1) if k not in banned]
    if not allowed[tree.root]:
        return None
    colors = [0] * g.n
    colors[tree.root] = allowed[tree.root][0]
    stack = [tree.root]
    while stack:
        v = stack.pop()
        for u in tree.children[v]:
            colors[u] = next(k for k in allowed[u] if k != colors[v])
            stack.append(u)
    return tuple(colors)


def cap_feasible_generic(
    instance: Instance, caps: Sequence[int], node_limit: int | None = None
) -> tuple[int, ...] | None:
    """Backtracking version of :func:`cap_feasible_tree` for any graph."""
    g = instance.graph
    limit = vertex_caps(instance, caps)
    order = sorted(range(g.n), key=lambda v: (limit[v], -g.degree(v), v))
    colors = [0] * g.n
    nodes = 0

    def go(pos: int) -> bool:
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise InconclusiveError(f"node limit {node_limit} exceeded")
        if pos == len(order):
            return True
        v = order[pos]
        taken = {colors[u] for u in g.adjacency[v]}
        for c in range(1, limit[v] + 1):
            if c not in taken:
                colors[v] = c
                if go(pos + 1):
                    return True
        colors[v] = 0
        return False

    return tuple(colors) if go(0) else None


def _is_tree(instance: Instance) -> bool:
    g = instance.graph
    return g.n >= 1 and len(g.edges) == g.n - 1 and len(g.components()) == 1


def solve_capvector(instance: Instance, node_limit: int | None = None) -> SolveResult:
    """Best-first search over cap vectors; the first feasible one is optimal."""
    require_valid(instance)
    t0 = time.perf_counter()
    ell = len(instance.bundles)
    bound = color_bound(instance)
    w = instance.weights
    tree = _is_tree(instance)

    def feasible(k: CapVector):
        if tree:
            return cap_feasible_tree(instance, k)
        return cap_feasible_generic(instance, k, node_limit)

    start = (1,) * ell
    heap = [(sum(w), start, 0)]
    infeasible: list[CapVector] = []
    tested = skipped = 0
    while heap:
        obj, k, first = heapq.heappop(heap)
        if any(all(a <= b for a, b in zip(k, bad)) for bad in infeasible):
            skipped += 1
            witness = None
        else:
            tested += 1
            witness = feasible(k)
        if witness is not None:
            stats = {
                "vectors_tested": tested,
                "vectors_skipped": skipped,
                "elapsed_ms": (time.perf_counter() - t0) * 1000,
            }
            res = make_result(instance, witness, "capvector", True, stats)
            if res.cost != obj:
                raise AssertionError(f"capvector witness costs {res.cost}, caps give {obj}")
            return res
        infeasible = [b for b in infeasible if not all(a <= c for a, c in zip(b, k))]
        infeasible.append(k)
        # raise coordinates in nondecreasing index order so each vector is pushed once
        for i in range(first, ell):
            if k[i] < bound:
                nk = k[:i] + (k[i] + 1,) + k[i + 1 :]
                heapq.heappush(heap, (obj + w[i], nk, i))
    raise UnsupportedInstanceError("no cap vector within the color bound is feasible")
