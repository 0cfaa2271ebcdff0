"""Polynomial cases on bipartite graphs.

Both solvers lean on the fact that a connected bipartite graph with an edge
has exactly two proper 2-colorings (one the swap of the other). Any bundle
whose maximum is 1 must be independent and entirely colored 1; what is
left is a per-component choice among a handful of color patterns.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from mscb.core import (
    Graph,
    Instance,
    SolveResult,
    UnsupportedInstanceError,
    bundle_maxes,
    make_result,
    require_valid,
)


class NotBipartiteError(UnsupportedInstanceError):
    pass


@dataclass(frozen=True)
class ComponentSides:
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    @property
    def edgeless(self) -> bool:
        return not self.side_b

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.side_a + self.side_b


def bipartite_sides(graph: Graph) -> list[ComponentSides]:
    """2-coloring per component; side A holds the component's smallest vertex."""
    side = graph.two_coloring()
    if side is None:
        raise NotBipartiteError("graph has an odd cycle")
    out = []
    for comp in graph.components():
        anchor = side[comp[0]]
        a = tuple(v for v in comp if side[v] == anchor)
        b = tuple(v for v in comp if side[v] != anchor)
        out.append(ComponentSides(a, b))
    return out


def _patterns(comp: ComponentSides, forced: set[int]) -> Iterable[dict[int, int]]:
    """Colorings of one component that put every ``forced`` vertex at color 1.

    Yields, in order: all-ones (edgeless only), the two 2-colorings, then
    forced vertices at 1 with the remaining vertices at 2/3 by side (both
    orientations). The caller picks the first that fits its caps.
    """
    if comp.edgeless:
        yield {v: 1 for v in comp.side_a}
        return
    a, b = comp.side_a, comp.side_b
    for one, two in ((a, b), (b, a)):
        if not forced.intersection(two):
            yield {**{v: 1 for v in one}, **{v: 2 for v in two}}
    for lo, hi in ((a, b), (b, a)):
        col = {v: (1 if v in forced else 2) for v in lo}
        col.update({v: (1 if v in forced else 3) for v in hi})
        yield col


def _fit(
    graph: Graph,
    sides: list[ComponentSides],
    forced: set[int],
    cap: Sequence[int],
) -> list[int] | None:
    """Cheapest-pattern coloring with forced vertices at 1 and ``c(v) <= cap[v]``."""
    if not graph.induced_is_independent(forced):
        return None
    colors = [0] * graph.n
    for comp in sides:
        for pat in _patterns(comp, forced):
            if all(c <= cap[v] for v, c in pat.items()):
                for v, c in pat.items():
                    colors[v] = c
                break
        else:
            return None
    return colors


def _two_coloring(sides: list[ComponentSides], n: int) -> list[int]:
    colors = [0] * n
    for comp in sides:
        for v in comp.side_a:
            colors[v] = 1
        for v in comp.side_b:
            colors[v] = 2
    return colors


def solve_bipartite_two(instance: Instance) -> SolveResult:
    """Bipartite graphs with at most two bundles, arbitrary weights."""
    require_valid(instance)
    ell = len(instance.bundles)
    if ell > 2:
        raise UnsupportedInstanceError("bip2 accepts at most two bundles")
    t0 = time.perf_counter()
    g = instance.graph
    sides = bipartite_sides(g)
    n = g.n
    candidates = [_two_coloring(sides, n)]
    for j in range(ell):
        forced = set(instance.bundles[j].members)
        # the other bundle is minimized by taking the first fitting pattern per component
        col = _fit(g, sides, forced, [3] * n)
        if col is not None:
            candidates.append(col)
    best = min(candidates, key=lambda c: _weighted(instance, c))
    stats = {"candidates": len(candidates), "elapsed_ms": (time.perf_counter() - t0) * 1000}
    return make_result(instance, best, "bip2", True, stats)


def _weighted(instance: Instance, colors: Sequence[int]) -> int:
    return sum(b.weight * m for b, m in zip(instance.bundles, bundle_maxes(instance, colors)))


def solve_bipartite_three_uniform(instance: Instance) -> SolveResult:
    """Bipartite graphs with at most three equally weighted bundles."""
    require_valid(instance)
    ell = len(instance.bundles)
    if ell > 3:
        raise UnsupportedInstanceError("bip3u accepts at most three bundles")
    if len(set(instance.weights)) > 1:
        raise UnsupportedInstanceError("bip3u needs uniform weights")
    t0 = time.perf_counter()
    g = instance.graph
    n = g.n
    sides = bipartite_sides(g)
    best = _two_coloring(sides, n)
    best_cost = _weighted(instance, best)
    checks = 0
    subsets = [s for r in range(1, ell + 1) for s in itertools.combinations(range(ell), r)]
    for chosen in subsets:
        forced = set().union(*(instance.bundles[j].members for j in chosen))
        if not g.induced_is_independent(forced):
            continue
        rest = [j for j in range(ell) if j not in chosen]
        profiles = sorted(itertools.product((1, 2, 3), repeat=len(rest)), key=lambda p: (sum(p), p))
        for prof in profiles:
            checks += 1
            cap = [3] * n
            for j, gam in zip(rest, prof):
                for v in instance.bundles[j].members:
                    cap[v] = min(cap[v], gam)
            hard = forced | {v for v in range(n) if cap[v] == 1}
            col = _fit(g, sides, hard, cap)
            if col is not None:
                value = _weighted(instance, col)
                if value < best_cost:
                    best, best_cost = col, value
                break
    stats = {"profile_checks": checks, "elapsed_ms": (time.perf_counter() - t0) * 1000}
    return make_result(instance, best, "bip3u", True, stats)
