"""Seed-deterministic random instances.

All randomness flows through one ``random.Random(seed)`` (Mersenne Twister,
identical across CPython platforms), so a spec plus its seed pins the
instance.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass

from mscb.core import Graph, Instance, MSCBError

SHAPES = ("tree", "path", "bipartite", "matching", "general")
FAMILIES = ("partition", "connected-partition", "independent-partition", "overlapping")


class SpecError(MSCBError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    """What to generate.

    ``bundles`` is the family size (None picks one at random). ``width``
    bounds the size of each random bundle in the overlapping family; on
    paths those bundles are subintervals. ``edge_prob`` is only used by the
    bipartite and general shapes.
    """

    shape: str = "tree"
    n: int = 8
    family: str = "partition"
    bundles: int | None = None
    width: int = 3
    wmin: int = 1
    wmax: int = 1
    seed: int = 0
    edge_prob: float = 0.4

    def problems(self) -> list[str]:
        out = []
        if self.shape not in SHAPES:
            out.append(f"unknown shape {self.shape!r}")
        if self.family not in FAMILIES:
            out.append(f"unknown family {self.family!r}")
        if self.n < 1:
            out.append("n must be positive")
        if self.shape == "matching" and self.n % 2:
            out.append("a perfect matching needs an even n")
        if not 1 <= self.wmin <= self.wmax:
            out.append(f"weight range [{self.wmin},{self.wmax}] must satisfy 1 <= wmin <= wmax")
        if self.width < 1:
            out.append("width must be positive")
        if self.bundles is not None:
            if self.bundles < 1:
                out.append("bundle count must be positive")
            elif self.family != "overlapping" and self.bundles > self.n:
                out.append(f"a partition of {self.n} vertices cannot have {self.bundles} bundles")
        if self.family == "connected-partition" and self.shape not in ("tree", "path"):
            out.append("connected-partition needs a connected shape (tree or path)")
        if self.family == "independent-partition" and self.shape == "general":
            out.append("independent-partition needs a bipartite shape")
        if not 0.0 <= self.edge_prob <= 1.0:
            out.append("edge_prob must lie in [0, 1]")
        return out

    def with_seed(self, seed: int) -> GeneratorSpec:
        return GeneratorSpec(**{**asdict(self), "seed": seed})


def _graph(spec: GeneratorSpec, rng: random.Random) -> tuple[Graph, list[int] | None]:
    """The graph plus a 2-coloring when the shape guarantees one."""
    n = spec.n
    if spec.shape == "tree":
        edges = [(rng.randrange(i), i) for i in range(1, n)]
    elif spec.shape == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif spec.shape == "matching":
        perm = list(range(n))
        rng.shuffle(perm)
        edges = [(perm[2 * i], perm[2 * i + 1]) for i in range(n // 2)]
    elif spec.shape == "bipartite":
        side = [rng.randrange(2) for _ in range(n)]
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if side[u] != side[v] and rng.random() < spec.edge_prob
        ]
    else:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < spec.edge_prob]
    g = Graph(n, tuple(edges))
    return g, g.two_coloring()


def _random_partition(items: list[int], parts: int, rng: random.Random) -> list[list[int]]:
    """Split ``items`` into ``parts`` nonempty groups uniformly over labels."""
    items = items[:]
    rng.shuffle(items)
    groups = [[x] for x in items[:parts]]
    for x in items[parts:]:
        groups[rng.randrange(parts)].append(x)
    return groups


def _contract(g: Graph, parts: int, rng: random.Random) -> list[list[int]]:
    """Connected partition: keep ``n - parts`` random tree edges, take components."""
    edges = list(g.edges)
    rng.shuffle(edges)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges[: g.n - parts]:
        parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def _independent(side: list[int], parts: int, rng: random.Random) -> list[list[int]]:
    classes = [[v for v in range(len(side)) if side[v] == s] for s in (0, 1)]
    classes = [c for c in classes if c]
    if parts < len(classes):
        raise SpecError(f"an independent partition here needs at least {len(classes)} bundles")
    # split the bundle budget between the sides, each side at least one, at most its size
    if len(classes) == 1:
        split = [parts]
    else:
        lo = max(1, parts - len(classes[1]))
        hi = min(len(classes[0]), parts - 1)
        first = rng.randint(lo, hi)
        split = [first, parts - first]
    out: list[list[int]] = []
    for cls, k in zip(classes, split):
        out += _random_partition(cls, k, rng)
    return out


def _intervals(n: int, count: int, width: int, rng: random.Random) -> list[list[int]]:
    spans = []
    for _ in range(count):
        w = rng.randint(1, min(width, n))
        left = rng.randrange(n - w + 1)
        spans.append([left, left + w - 1])
    covered = [False] * n
    for a, b in spans:
        for i in range(a, b + 1):
            covered[i] = True
    for p in range(n):
        if covered[p]:
            continue
        before = [s for s in spans if s[1] < p]
        if before:
            span = max(before, key=lambda s: s[1])
            span[1] = p
        else:
            span = min(spans, key=lambda s: s[0])
            span[0] = p
        for i in range(span[0], span[1] + 1):
            covered[i] = True
    return [list(range(a, b + 1)) for a, b in spans]


def _overlapping(n: int, count: int, width: int, rng: random.Random) -> list[list[int]]:
    out = [rng.sample(range(n), rng.randint(1, min(width, n))) for _ in range(count)]
    covered = set().union(*map(set, out))
    for v in range(n):
        if v not in covered:
            out[rng.randrange(count)].append(v)
    return out


def generate(spec: GeneratorSpec) -> Instance:
    problems = spec.problems()
    if problems:
        raise SpecError("; ".join(problems))
    rng = random.Random(spec.seed)
    g, side = _graph(spec, rng)
    n = spec.n
    if spec.family == "independent-partition":
        min_parts = 2 if g.edges else 1
        count = spec.bundles if spec.bundles is not None else rng.randint(min_parts, n)
        members = _independent(side, count, rng)
    else:
        count = spec.bundles if spec.bundles is not None else rng.randint(1, n)
        if spec.family == "partition":
            members = _random_partition(list(range(n)), count, rng)
        elif spec.family == "connected-partition":
            members = _contract(g, count, rng)
        elif spec.shape == "path":
            members = _intervals(n, count, spec.width, rng)
        else:
            members = _overlapping(n, count, spec.width, rng)
    bundles = [(rng.randint(spec.wmin, spec.wmax), m) for m in members]
    return Instance.build(n, g.edges, bundles)
