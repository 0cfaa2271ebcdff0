"""Exhaustive reference solvers.

Nothing here is clever; the point is that each routine is small enough to
trust, so the polynomial solvers and the reduction generators can be checked
against it on small inputs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from mscb.core import (
    Graph,
    InconclusiveError,
    InfeasibleError,
    Instance,
    SolveResult,
    greedy_coloring,
    make_result,
    require_valid,
)


@dataclass(frozen=True)
class OracleConfig:
    """Search limits for :func:`solve_bruteforce`.

    ``color_cap`` is a global bound on colors (``None`` means max degree + 1).
    With ``per_vertex_cap`` each vertex is further limited to degree + 1,
    which never loses an optimum.
    """

    color_cap: int | None = None
    node_limit: int | None = None
    per_vertex_cap: bool = True
    lex_witness: bool = True

    def __post_init__(self) -> None:
        if self.color_cap is not None and self.color_cap < 1:
            raise ValueError("color_cap must be at least 1")


class _Search:
    """Depth-first branch and bound over vertex colors."""

    def __init__(self, instance: Instance, caps: list[int], node_limit: int | None):
        self.instance = instance
        self.graph = instance.graph
        self.caps = caps
        self.node_limit = node_limit
        self.nodes = 0
        self.weights = [b.weight for b in instance.bundles]
        self.touch = [
            [(j, self.weights[j]) for j in instance.bundles_of[v]] for v in range(instance.n)
        ]

    def _tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise InconclusiveError(f"node limit {self.node_limit} exceeded")

    def run(self, order: Sequence[int], bound: int, strict: bool, collect: bool = False):
        """Explore colorings in ``order`` whose cost beats ``bound``.

        ``strict`` searches for cost < bound and tightens it on every hit.
        Otherwise every coloring with cost <= bound is reported (stopping at
        the first one unless ``collect`` is set).
        """
        n = self.instance.n
        adj = self.graph.adjacency
        caps = self.caps
        touch = self.touch
        cur = [1] * len(self.weights)  # max(current bundle max, 1)
        colors = [0] * n
        state = {"lb": sum(self.weights), "bound": bound}
        found: list[tuple[int, ...]] = []

        def dfs(pos: int) -> bool:
            self._tick()
            if pos == n:
                if strict:
                    state["bound"] = state["lb"]
                    found[:] = [tuple(colors)]
                    return False
                found.append(tuple(colors))
                return not collect
            v = order[pos]
            forbidden = {colors[u] for u in adj[v]}
            lb = state["lb"]
            for c in range(1, caps[v] + 1):
                if c in forbidden:
                    continue
                delta = 0
                for j, w in touch[v]:
                    if c > cur[j]:
                        delta += w * (c - cur[j])
                limit = state["bound"]
                if (lb + delta >= limit) if strict else (lb + delta > limit):
                    break  # delta only grows with c
                saved = [(j, cur[j]) for j, _ in touch[v] if c > cur[j]]
                for j, _ in saved:
                    cur[j] = c
                colors[v] = c
                state["lb"] = lb + delta
                stop = dfs(pos + 1)
                state["lb"] = lb
                colors[v] = 0
                for j, old in saved:
                    cur[j] = old
                if stop:
                    return True
            return False

        dfs(0)
        return state["bound"], found


def _vertex_caps(instance: Instance, config: OracleConfig) -> list[int]:
    g = instance.graph
    if config.per_vertex_cap:
        top = config.color_cap if config.color_cap is not None else g.max_degree + 1
        return [min(top, g.degree(v) + 1) for v in range(g.n)]
    if config.color_cap is None:
        raise ValueError("a global color_cap is required when per_vertex_cap is off")
    return [config.color_cap] * g.n


def solve_bruteforce(instance: Instance, config: OracleConfig | None = None) -> SolveResult:
    """Provably optimal solution by exhaustive branch and bound.

    The reported witness is the lexicographically smallest optimal color
    sequence under the configured caps (unless ``lex_witness`` is off, in
    which case it is the first optimum the search met).
    """
    config = config or OracleConfig()
    require_valid(instance)
    t0 = time.perf_counter()
    g = instance.graph
    caps = _vertex_caps(instance, config)
    if any(c < 1 for c in caps):
        raise InfeasibleError("some vertex has an empty color range")
    search = _Search(instance, caps, config.node_limit)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))

    seed = greedy_coloring(g, order)
    if all(c <= cap for c, cap in zip(seed, caps)):
        ws = [b.weight for b in instance.bundles]
        bound = sum(w * max(seed[v] for v in b.members) for w, b in zip(ws, instance.bundles))
        best_col = [tuple(seed)]
    else:
        bound, best_col = sum(b.weight for b in instance.bundles) * (max(caps) + 1) + 1, []
    bound, found = search.run(order, bound, strict=True)
    if found:
        best_col = found
    if not best_col:
        raise InfeasibleError("no proper coloring within the color caps")
    witness = best_col[0]
    if config.lex_witness:
        _, lex = search.run(list(range(g.n)), bound, strict=False)
        witness = lex[0]
    stats = {"nodes": search.nodes, "elapsed_ms": (time.perf_counter() - t0) * 1000}
    return make_result(instance, witness, "oracle", True, stats)


def enumerate_optimal(instance: Instance, color_cap: int) -> list[tuple[int, ...]]:
    """All proper colorings with colors <= ``color_cap`` that attain the minimum."""
    require_valid(instance)
    if color_cap < 1:
        raise InfeasibleError("color_cap must be positive")
    best = solve_bruteforce(
        instance, OracleConfig(color_cap=color_cap, per_vertex_cap=False, lex_witness=False)
    )
    search = _Search(instance, [color_cap] * instance.n, None)
    _, found = search.run(list(range(instance.n)), best.cost, strict=False, collect=True)
    return sorted(found)


def max_independent_set(graph: Graph) -> tuple[int, frozenset[int]]:
    """Maximum independent set size and one witness, by branching."""
    adj = [set(a) for a in graph.adjacency]
    best: list = [0, frozenset()]

    def go(remaining: frozenset[int], chosen: frozenset[int]) -> None:
        if len(chosen) + len(remaining) <= best[0]:
            return
        if not remaining:
            best[0], best[1] = len(chosen), chosen
            return
        v = max(sorted(remaining), key=lambda x: len(adj[x] & remaining))
        if not adj[v] & remaining:
            go(frozenset(), chosen | remaining)
            return
        go(remaining - adj[v] - {v}, chosen | {v})
        go(remaining - {v}, chosen)

    go(frozenset(range(graph.n)), frozenset())
    return best[0], best[1]


def list_coloring_feasible(
    graph: Graph, lists: Sequence[Sequence[int]]
) -> tuple[int, ...] | None:
    """A proper coloring choosing every color from the vertex's list, or None."""
    if len(lists) != graph.n:
        raise ValueError("need one list per vertex")
    if any(not lst for lst in lists):
        return None
    order = sorted(range(graph.n), key=lambda v: (len(lists[v]), -graph.degree(v), v))
    colors = [0] * graph.n

    def go(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        taken = {colors[u] for u in graph.adjacency[v]}
        for c in sorted(set(lists[v])):
            if c not in taken:
                colors[v] = c
                if go(pos + 1):
                    return True
        colors[v] = 0
        return False

    return tuple(colors) if go(0) else None


def k_coloring(graph: Graph, k: int) -> tuple[int, ...] | None:
    """A proper coloring with colors 1..k, or None."""
    order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    colors = [0] * graph.n

    def go(pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        taken = {colors[u] for u in graph.adjacency[v]}
        # a fresh color is interchangeable with any other fresh one
        for c in range(1, min(k, used + 1) + 1):
            if c not in taken:
                colors[v] = c
                if go(pos + 1, max(used, c)):
                    return True
        colors[v] = 0
        return False

    return tuple(colors) if go(0, 0) else None


def chromatic_number(graph: Graph) -> int:
    if graph.n == 0:
        return 0
    k = 1
    while k_coloring(graph, k) is None:
        k += 1
    return k
