"""Data model for minimum sum coloring with bundles.

An instance is an undirected simple graph on vertices ``0..n-1`` together
with an ordered family of weighted bundles. A coloring assigns a positive
integer to every vertex (``0`` marks an uncolored vertex in partial
colorings); its cost is the weighted sum over bundles of the largest color
inside each bundle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Coloring = tuple[int, ...]


class MSCBError(Exception):
    """Base class for all errors raised by this package."""


class InvalidColoringError(MSCBError):
    """A coloring is partial, improper or has the wrong length."""


class UnsupportedInstanceError(MSCBError):
    """A solver was handed an instance outside the class it accepts."""


class InconclusiveError(MSCBError):
    """An exhaustive search hit its node limit before finishing."""


class InfeasibleError(MSCBError):
    """No coloring exists under the requested color caps."""


@dataclass(frozen=True)
class Graph:
    """Undirected graph with contiguous integer vertex ids.

    Edges are stored as sorted ``(u, v)`` pairs with ``u <= v``. Self-loops
    and duplicates are kept so that :func:`validate_instance` can report
    them; every other helper assumes a valid simple graph.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        norm = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        object.__setattr__(self, "edges", norm)

    @property
    def n(self) -> int:
        return self.vertex_count

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return tuple(tuple(sorted(s)) for s in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.vertex_count
        out = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def two_coloring(self) -> list[int] | None:
        """Side labels 0/1 from a BFS per component, or None on an odd cycle."""
        side = [-1] * self.vertex_count
        for s in range(self.vertex_count):
            if side[s] >= 0:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if side[y] < 0:
                        side[y] = 1 - side[x]
                        queue.append(y)
                    elif side[y] == side[x]:
                        return None
        return side

    def induced_is_connected(self, members: Iterable[int]) -> bool:
        ms = set(members)
        if not ms:
            return False
        start = min(ms)
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in self.adjacency[x]:
                if y in ms and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(ms)

    def induced_is_independent(self, members: Iterable[int]) -> bool:
        ms = set(members)
        return not any(y in ms for x in ms for y in self.adjacency[x])


@dataclass(frozen=True)
class Bundle:
    index: int
    weight: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Instance:
    graph: Graph
    bundles: tuple[Bundle, ...]
    budget: int | None = None

    @classmethod
    def build(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        bundles: Iterable[tuple[int, Iterable[int]]],
        budget: int | None = None,
    ) -> Instance:
        """Convenience constructor from ``(weight, members)`` pairs."""
        graph = Graph(n, tuple((int(u), int(v)) for u, v in edges))
        family = tuple(Bundle(j, int(w), tuple(ms)) for j, (w, ms) in enumerate(bundles))
        return cls(graph, family, budget)

    @property
    def n(self) -> int:
        return self.graph.vertex_count

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(b.weight for b in self.bundles)

    @cached_property
    def bundles_of(self) -> tuple[tuple[int, ...], ...]:
        """For every vertex, the indices of the bundles containing it."""
        out: list[list[int]] = [[] for _ in range(self.n)]
        for j, b in enumerate(self.bundles):
            for v in b.members:
                out[v].append(j)
        return tuple(tuple(x) for x in out)

    def with_bundles(self, bundles: Iterable[tuple[int, Iterable[int]]]) -> Instance:
        family = tuple(Bundle(j, w, tuple(ms)) for j, (w, ms) in enumerate(bundles))
        return Instance(self.graph, family, self.budget)


@dataclass(frozen=True)
class InstanceClass:
    is_tree: bool
    is_path: bool
    is_bipartite: bool
    is_perfect_matching: bool
    bundles_partition: bool
    bundles_connected: bool
    bundles_independent: bool
    weights_uniform: bool
    n: int
    bundle_count: int
    non_singleton_count: int


@dataclass
class SolveResult:
    cost: int
    coloring: Coloring
    bundle_maxes: tuple[int, ...]
    solver: str
    optimal: bool = True
    stats: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "cost": self.cost,
            "coloring": list(self.coloring),
            "bundle_maxes": list(self.bundle_maxes),
            "solver": self.solver,
            "optimal": self.optimal,
            "stats": dict(self.stats),
        }


def validate_instance(instance: Instance) -> list[str]:
    """Every violated structural invariant, as human-readable strings."""
    problems: list[str] = []
    g = instance.graph
    n = g.vertex_count
    if n < 0:
        problems.append(f"negative vertex count {n}")
        return problems
    seen: set[tuple[int, int]] = set()
    for u, v in g.edges:
        if not (0 <= u < n and 0 <= v < n):
            problems.append(f"edge ({u},{v}) has an endpoint outside [0,{n})")
            continue
        if u == v:
            problems.append(f"self-loop at vertex {u}")
            continue
        if (u, v) in seen:
            problems.append(f"duplicate edge ({u},{v})")
        seen.add((u, v))
    if not instance.bundles:
        problems.append("bundle family is empty")
    covered = [False] * n
    for j, b in enumerate(instance.bundles):
        if b.index != j:
            problems.append(f"bundle {j} carries index {b.index}")
        if b.weight < 1:
            problems.append(f"bundle {j} has non-positive weight {b.weight}")
        if not b.members:
            problems.append(f"bundle {j} is empty")
        for v in b.members:
            if 0 <= v < n:
                covered[v] = True
            else:
                problems.append(f"bundle {j} member {v} outside [0,{n})")
    for v in range(n):
        if not covered[v]:
            problems.append(f"uncovered vertex {v}")
    if instance.budget is not None and instance.budget < 1:
        problems.append(f"non-positive budget {instance.budget}")
    return problems


def check_coloring(graph: Graph, coloring: Sequence[int], partial: bool = False) -> None:
    """Raise :class:`InvalidColoringError` unless ``coloring`` is proper.

    With ``partial`` set, zeros are allowed and edges touching an uncolored
    vertex are ignored.
    """
    if len(coloring) != graph.vertex_count:
        raise InvalidColoringError(
            f"coloring has length {len(coloring)}, expected {graph.vertex_count}"
        )
    for v, c in enumerate(coloring):
        if c < 0 or (c == 0 and not partial):
            raise InvalidColoringError(f"vertex {v} has invalid color {c}")
    for u, v in graph.edges:
        if coloring[u] and coloring[u] == coloring[v]:
            raise InvalidColoringError(f"edge ({u},{v}) is monochromatic with color {coloring[u]}")


def is_proper(graph: Graph, coloring: Sequence[int]) -> bool:
    try:
        check_coloring(graph, coloring)
    except InvalidColoringError:
        return False
    return True


def bundle_max(instance: Instance, coloring: Sequence[int], j: int) -> int:
    if not 0 <= j < len(instance.bundles):
        raise IndexError(f"bundle index {j} out of range")
    return max(coloring[v] for v in instance.bundles[j].members)


def bundle_maxes(instance: Instance, coloring: Sequence[int]) -> tuple[int, ...]:
    return tuple(max(coloring[v] for v in b.members) for b in instance.bundles)


def cost(instance: Instance, coloring: Sequence[int]) -> int:
    """Weighted sum of bundle maxima of a total proper coloring."""
    check_coloring(instance.graph, coloring)
    return sum(b.weight * m for b, m in zip(instance.bundles, bundle_maxes(instance, coloring)))


def decide(instance: Instance, result: SolveResult) -> bool:
    if instance.budget is None:
        raise ValueError("instance has no budget to decide against")
    if not result.optimal:
        raise ValueError("cannot decide from a non-optimal result")
    return result.cost <= instance.budget


def make_result(
    instance: Instance,
    coloring: Sequence[int],
    solver: str,
    optimal: bool = True,
    stats: dict[str, float] | None = None,
) -> SolveResult:
    """Package a witness, recomputing its cost from scratch."""
    colors = tuple(int(c) for c in coloring)
    value = cost(instance, colors)
    return SolveResult(value, colors, bundle_maxes(instance, colors), solver, optimal, stats or {})


def verify_result(instance: Instance, result: SolveResult) -> None:
    """Re-check a result's witness; raise :class:`InvalidColoringError` on mismatch."""
    value = cost(instance, result.coloring)
    if value != result.cost:
        raise InvalidColoringError(f"witness costs {value}, result claims {result.cost}")
    if tuple(result.bundle_maxes) != bundle_maxes(instance, result.coloring):
        raise InvalidColoringError("bundle maxima disagree with the witness")


def classify(instance: Instance) -> InstanceClass:
    g = instance.graph
    n = g.vertex_count
    comps = g.components()
    is_tree = n >= 1 and len(comps) == 1 and len(g.edges) == n - 1
    is_path = is_tree and g.max_degree <= 2
    is_bipartite = g.two_coloring() is not None
    is_pm = n > 0 and all(g.degree(v) == 1 for v in range(n))
    counts = [0] * n
    for b in instance.bundles:
        for v in b.members:
            counts[v] += 1
    partition = all(c == 1 for c in counts)
    connected = all(g.induced_is_connected(b.members) for b in instance.bundles)
    independent = all(g.induced_is_independent(b.members) for b in instance.bundles)
    uniform = len({b.weight for b in instance.bundles}) <= 1
    t = sum(1 for b in instance.bundles if len(b.members) >= 2)
    return InstanceClass(
        is_tree=is_tree,
        is_path=is_path,
        is_bipartite=is_bipartite,
        is_perfect_matching=is_pm,
        bundles_partition=partition,
        bundles_connected=connected,
        bundles_independent=independent,
        weights_uniform=uniform,
        n=n,
        bundle_count=len(instance.bundles),
        non_singleton_count=t,
    )


def require_valid(instance: Instance) -> None:
    problems = validate_instance(instance)
    if problems:
        raise UnsupportedInstanceError("invalid instance: " + "; ".join(problems))


def greedy_coloring(graph: Graph, order: Iterable[int] | None = None) -> list[int]:
    """First-fit coloring; colors never exceed degree + 1."""
    colors = [0] * graph.vertex_count
    for v in order if order is not None else range(graph.vertex_count):
        used = {colors[u] for u in graph.adjacency[v]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return colors
