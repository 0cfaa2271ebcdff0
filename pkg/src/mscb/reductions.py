"""Instance generators for the NP-hardness constructions.

Each function builds the target instance of one polynomial reduction and a
trace mapping source entities to target entities, so tests can translate
witnesses in either direction.

Target numbering is deterministic: source-derived vertices come first in
(vertex id, edge id / copy index) order, auxiliary vertices after them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Hashable, Sequence

from mscb.core import Graph, Instance, UnsupportedInstanceError, classify, validate_instance

PALETTE = (1, 2, 3)


@dataclass(frozen=True)
class ListColoringInstance:
    graph: Graph
    lists: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lists", tuple(tuple(sorted(set(x))) for x in self.lists))

    def problems(self) -> list[str]:
        out = []
        if len(self.lists) != self.graph.n:
            out.append(f"{len(self.lists)} lists for {self.graph.n} vertices")
        for v, lst in enumerate(self.lists):
            if not lst:
                out.append(f"empty list at vertex {v}")
            elif not set(lst) <= set(PALETTE):
                out.append(f"list at vertex {v} leaves {{1,2,3}}")
        if self.graph.two_coloring() is None:
            out.append("graph is not bipartite")
        return out


@dataclass
class ReductionTrace:
    mapping: dict[Hashable, Any] = field(default_factory=dict)
    budget: int = 0


def reduce_is_to_matching(graph: Graph, k: int) -> tuple[Instance, ReductionTrace]:
    """Independent Set (G, k) -> perfect-matching instance with budget 2|V| - k.

    Each vertex ``v`` is split into one copy ``p(v, e)`` per incident edge;
    the copies of ``v`` form bundle ``B_v``.
    """
    n = graph.n
    if k < 1:
        raise ValueError("k must be positive")
    budget = 2 * n - k
    if budget < 1:
        raise ValueError(f"k={k} leaves a non-positive budget")
    isolated = [v for v in range(n) if graph.degree(v) == 0]
    if isolated:
        raise UnsupportedInstanceError(f"isolated vertex {isolated[0]} would give an empty bundle")
    edges = graph.edges
    incident: list[list[int]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        incident[u].append(e)
        incident[v].append(e)
    trace = ReductionTrace(budget=budget)
    vid = 0
    for v in range(n):
        for e in incident[v]:
            trace.mapping[("p", v, e)] = vid
            vid += 1
    new_edges = [(trace.mapping[("p", u, e)], trace.mapping[("p", v, e)]) for e, (u, v) in enumerate(edges)]
    bundles = []
    for v in range(n):
        trace.mapping[("bundle", v)] = v
        bundles.append((1, [trace.mapping[("p", v, e)] for e in incident[v]]))
    return Instance.build(vid, new_edges, bundles, budget), trace


def reduce_matching_to_path(instance: Instance) -> tuple[Instance, ReductionTrace]:
    """Perfect-matching instance (budget C) -> path instance with budget 4C + 3.

    Four copies of the matching are strung into one path: inside a copy,
    connector ``x^i_j`` joins the end of matching edge ``j`` to the start of
    edge ``j + 1``; ``y^i`` joins copy ``i`` to copy ``i + 1``. All
    connectors form one extra bundle, placed last.
    """
    problems = validate_instance(instance)
    if problems:
        raise UnsupportedInstanceError("; ".join(problems))
    info = classify(instance)
    if not (info.is_perfect_matching and info.bundles_partition and info.bundles_independent):
        raise UnsupportedInstanceError(
            "source must be a perfect matching with an independent partition into bundles"
        )
    if any(b.weight != 1 for b in instance.bundles):
        raise UnsupportedInstanceError("source weights must all be 1")
    if instance.budget is None:
        raise UnsupportedInstanceError("source needs a budget")
    src_n = instance.n
    match = list(instance.graph.edges)  # v_{2j-1} = match[j][0], v_{2j} = match[j][1]
    m = len(match)
    trace = ReductionTrace(budget=4 * instance.budget + 3)

    def copy(i: int, v: int) -> int:
        return i * src_n + v

    for i in range(4):
        for v in range(src_n):
            trace.mapping[("copy", i + 1, v)] = copy(i, v)
    vid = 4 * src_n
    edges: list[tuple[int, int]] = []
    connectors: list[int] = []
    for i in range(4):
        for u, v in match:
            edges.append((copy(i, u), copy(i, v)))
        for j in range(m - 1):
            x = vid
            vid += 1
            trace.mapping[("x", i + 1, j + 1)] = x
            connectors.append(x)
            edges.append((copy(i, match[j][1]), x))
            edges.append((x, copy(i, match[j + 1][0])))
    for i in range(3):
        y = vid
        vid += 1
        trace.mapping[("y", i + 1)] = y
        connectors.append(y)
        edges.append((copy(i, match[-1][1]), y))
        edges.append((y, copy(i + 1, match[0][0])))
    bundles = []
    for i in range(4):
        for b in instance.bundles:
            trace.mapping[("bundle", i + 1, b.index)] = len(bundles)
            bundles.append((1, [copy(i, v) for v in b.members]))
    trace.mapping[("bundle", 0)] = len(bundles)
    bundles.append((1, connectors))
    return Instance.build(vid, edges, bundles, trace.budget), trace


def _check_lc(lc: ListColoringInstance) -> None:
    problems = lc.problems()
    if problems:
        raise UnsupportedInstanceError("; ".join(problems))


# copies made per list class, in naming order
_COPIES = {(2,): (1,), (3,): (1, 2, 3), (1, 3): (1, 2), (2, 3): (1,)}


def _listcol_core(lc: ListColoringInstance, aux: int):
    """Shared skeleton of the two list-coloring constructions.

    Returns the trace, vertex count, edge list and the bundle member lists
    B1..B4 before the auxiliary gadget vertices are added.
    """
    _check_lc(lc)
    g = lc.graph
    n = g.n
    trace = ReductionTrace(budget=7)
    for v in range(n):
        trace.mapping[("v", v)] = v
    vid = n
    for v in range(n):
        for i in _COPIES.get(lc.lists[v], ()):
            trace.mapping[("copy", v, i)] = vid
            vid += 1
    for i in range(1, aux + 1):
        trace.mapping[("aux", i)] = vid
        vid += 1

    def cp(v: int, i: int) -> int:
        return trace.mapping[("copy", v, i)]

    edges = list(g.edges)
    b1: list[int] = []
    b2: list[int] = []
    b3: list[int] = []
    for v in range(n):
        z = lc.lists[v]
        if z == (1,):
            b1.append(v)
        elif z == (2,):
            b2.append(v)
            b1.append(cp(v, 1))
            edges.append((v, cp(v, 1)))
        elif z == (1, 2):
            b2.append(v)
        elif z == (3,):
            b3.append(v)
            b1 += [cp(v, 1), cp(v, 3)]
            b2.append(cp(v, 2))
            edges += [(v, cp(v, 2)), (cp(v, 2), cp(v, 1)), (v, cp(v, 3))]
        elif z == (1, 3):
            b3.append(v)
            b1.append(cp(v, 1))
            b2.append(cp(v, 2))
            edges += [(v, cp(v, 2)), (cp(v, 2), cp(v, 1))]
        elif z == (2, 3):
            b3.append(v)
            b1.append(cp(v, 1))
            edges.append((v, cp(v, 1)))
        else:  # {1, 2, 3}
            b3.append(v)
    return trace, vid, edges, [b1, b2, b3]


def reduce_listcol_to_bipartite4(lc: ListColoringInstance) -> tuple[Instance, ReductionTrace]:
    """Bipartite 3-list-coloring -> bipartite instance, four unit bundles, budget 7."""
    trace, total, edges, (b1, b2, b3) = _listcol_core(lc, 16)

    def a(i: int) -> int:
        return trace.mapping[("aux", i)]

    edges += [(a(1), a(2)), (a(11), a(12))]
    for i in (3, 4, 5, 7, 8, 9, 13, 14, 15):
        edges.append((a(i), a(i + 1)))
    b1 += [a(1), a(3), a(6)]
    b2 += [a(2), a(7), a(10), a(12)]
    b3 += [a(4), a(5), a(8), a(9), a(14), a(15)]
    b4 = [a(11), a(13), a(16)]
    bundles = [(1, b1), (1, b2), (1, b3), (1, b4)]
    return Instance.build(total, edges, bundles, 7), trace


def reduce_listcol_to_bipartite3_weighted(
    lc: ListColoringInstance,
) -> tuple[Instance, ReductionTrace]:
    """Same construction without gadget vertices 11..16; weights (2, 1, 1), budget 7."""
    trace, total, edges, (b1, b2, b3) = _listcol_core(lc, 10)

    def a(i: int) -> int:
        return trace.mapping[("aux", i)]

    edges.append((a(1), a(2)))
    for i in (3, 4, 5, 7, 8, 9):
        edges.append((a(i), a(i + 1)))
    b1 += [a(1), a(3), a(6)]
    b2 += [a(2), a(7), a(10)]
    b3 += [a(4), a(5), a(8), a(9)]
    bundles = [(2, b1), (1, b2), (1, b3)]
    return Instance.build(total, edges, bundles, 7), trace


def lift_list_coloring(trace: ReductionTrace, colors: Sequence[int], n: int) -> tuple[int, ...]:
    """Restrict a target coloring to the source vertices."""
    return tuple(colors[trace.mapping[("v", v)]] for v in range(n))
