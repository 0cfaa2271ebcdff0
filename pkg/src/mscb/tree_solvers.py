"""Dynamic programs for trees and paths.

Three exact solvers:

* :func:`solve_xp_tree` fixes caps on the non-singleton bundles of a
  partition and optimizes the singleton vertices bottom-up. Polynomial when
  the number of non-singleton bundles is bounded.
* :func:`solve_connected_partition_tree` handles partitions whose bundles
  induce subtrees, tracking the vertex color and the running bundle maximum.
* :func:`solve_connected_path` handles paths whose bundles are subpaths
  (overlaps allowed), using colors 1..3 and the last positions of colors
  2 and 3.

All three restrict vertex ``v`` to colors ``<= deg(v) + 1``; recoloring a
vertex down to a color missing from its neighborhood never raises the cost
nor breaks a cap, so some optimum survives the restriction.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as np

from mscb.core import (
    Graph,
    Instance,
    SolveResult,
    UnsupportedInstanceError,
    classify,
    make_result,
    require_valid,
)

INF = float("inf")


@dataclass(frozen=True)
class RootedTree:
    root: int
    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    postorder: tuple[int, ...]


def rooted_tree(graph: Graph, root: int = 0) -> RootedTree:
    n = graph.n
    if n == 0 or len(graph.edges) != n - 1:
        raise UnsupportedInstanceError("graph is not a tree")
    parent = [-1] * n
    seen = [False] * n
    seen[root] = True
    preorder = []
    stack = [root]
    while stack:
        v = stack.pop()
        preorder.append(v)
        for u in reversed(graph.adjacency[v]):
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                stack.append(u)
    if len(preorder) != n:
        raise UnsupportedInstanceError("graph is not a tree")
    children: list[list[int]] = [[] for _ in range(n)]
    for v in preorder[1:]:
        children[parent[v]].append(v)
    return RootedTree(
        root,
        tuple(parent),
        tuple(tuple(sorted(c)) for c in children),
        tuple(reversed(preorder)),
    )


def _best_two(values: list[float]) -> tuple[int, float, float]:
    """Index of the minimum, the minimum, and the minimum over the others."""
    bi, b1, b2 = -1, INF, INF
    for i, x in enumerate(values):
        if x < b1:
            bi, b1, b2 = i, x, b1
        elif x < b2:
            b2 = x
    return bi, b1, b2


def _min_except(values: list[float], skip: int) -> tuple[float, int]:
    """Min of ``values[i]`` over ``i != skip`` and its smallest argmin."""
    best, arg = INF, -1
    for i, x in enumerate(values):
        if i != skip and x < best:
            best, arg = x, i
    return best, arg


# ---------------------------------------------------------------------------
# XP algorithm over cap vectors of the non-singleton bundles


def solve_xp_tree(instance: Instance) -> SolveResult:
    """Trees with a partition into bundles; exponential only in the number
    of non-singleton bundles."""
    require_valid(instance)
    info = classify(instance)
    if not info.is_tree or not info.bundles_partition:
        raise UnsupportedInstanceError("xp-tree needs a tree and a partition")
    t0 = time.perf_counter()
    g = instance.graph
    n = g.n
    ell = len(instance.bundles)
    tree = rooted_tree(g, 0)

    owner = [instance.bundles_of[v][0] for v in range(n)]
    big = [j for j, b in enumerate(instance.bundles) if len(b) >= 2]
    slot = {j: i for i, j in enumerate(big)}
    weight = instance.weights
    # colors above 2*ell never appear in an optimum (chromatic bound), nor above deg+1
    top = [min(2 * ell, g.degree(v) + 1) for v in range(n)]
    cap_ranges = [
        range(1, min(2 * ell, max(top[v] for v in instance.bundles[j].members)) + 1) for j in big
    ]

    best = (INF, None, 0)
    cells = 0
    for caps in itertools.product(*cap_ranges):
        f: list[list[float]] = [[] for _ in range(n)]
        for v in tree.postorder:
            j = owner[v]
            single = j not in slot
            kids = [_best_two(f[u]) for u in tree.children[v]]
            row = []
            for k in range(1, top[v] + 1):
                if not single and k > caps[slot[j]]:
                    row.append(INF)
                    continue
                val = weight[j] * k if single else 0
                for bi, b1, b2 in kids:
                    val += b2 if bi == k - 1 else b1
                row.append(val)
            cells += len(row)
            f[v] = row
        root_row = f[tree.root]
        extra = sum(weight[j] * caps[slot[j]] for j in big)
        for k, val in enumerate(root_row, start=1):
            if val + extra < best[0]:
                best = (val + extra, (caps, f), k)
    total, (caps, f), k_root = best
    colors = [0] * n
    colors[tree.root] = k_root
    stack = [tree.root]
    while stack:
        v = stack.pop()
        for u in tree.children[v]:
            _, arg = _min_except(f[u], colors[v] - 1)
            colors[u] = arg + 1
            stack.append(u)
    stats = {
        "cap_vectors": float(np.prod([len(r) for r in cap_ranges])) if cap_ranges else 1.0,
        "cells": cells,
        "elapsed_ms": (time.perf_counter() - t0) * 1000,
    }
    res = make_result(instance, colors, "xp-tree", True, stats)
    if res.cost != total:
        raise AssertionError(f"xp-tree witness costs {res.cost}, table says {total}")
    return res


# ---------------------------------------------------------------------------
# connected partitions on trees


def solve_connected_partition_tree(instance: Instance) -> SolveResult:
    """Trees whose bundles partition V into subtrees; polynomial in n.

    ``f[v][k-1, g-1]`` is the cheapest coloring of the subtree at ``v`` with
    ``c(v) = k`` and the maximum over the subtree's part of ``B(v)`` equal
    to ``g``. Bundles other than ``B(v)`` are finished inside a child's
    subtree; ``B(v)`` is charged once at ``v``.
    """
    require_valid(instance)
    info = classify(instance)
    if not (info.is_tree and info.bundles_partition and info.bundles_connected):
        raise UnsupportedInstanceError("connected-tree needs a tree and a connected partition")
    t0 = time.perf_counter()
    g_ = instance.graph
    n = g_.n
    tree = rooted_tree(g_, 0)
    owner = [instance.bundles_of[v][0] for v in range(n)]
    w = instance.weights
    kmax = [g_.degree(v) + 1 for v in range(n)]
    gmax = [max(kmax[u] for u in b.members) for b in instance.bundles]

    tables: list[np.ndarray] = [np.empty(0)] * n
    cells = 0
    for v in tree.postorder:
        j = owner[v]
        K, G = kmax[v], gmax[j]
        ks = np.arange(1, K + 1)[:, None]
        gs = np.arange(1, G + 1)[None, :]
        same_acc = np.zeros((K, G))  # sum over W of A_u(k, g)
        other_acc = np.zeros(K)  # sum over U \ W of O_u(k)
        lift = np.full((K, G), INF)  # min over u' in W of D_u'(k,g) - A_u'(k,g)
        for u in tree.children[v]:
            fu = tables[u]
            Ku = fu.shape[0]
            if owner[u] == j:
                h = np.minimum.accumulate(fu - w[j] * np.arange(1, G + 1)[None, :], axis=1)
                A = _exclude_min(h, K)
                D = _exclude_min(fu, K)
                with np.errstate(invalid="ignore"):
                    diff = D - A
                diff[np.isnan(diff)] = INF
                lift = np.minimum(lift, diff)
                same_acc = same_acc + A
            else:
                m = fu.min(axis=1)[:, None]
                other_acc = other_acc + _exclude_min(m, K)[:, 0]
            cells += Ku * fu.shape[1]
        base = same_acc + other_acc[:, None]
        eq = base + w[j] * gs
        lt = base + lift
        f = np.where(ks == gs, eq, np.where(ks < gs, lt, INF))
        tables[v] = f
    root = tables[tree.root]
    total = root.min()
    k0, g0 = np.unravel_index(int(np.argmin(root)), root.shape)
    colors = [0] * n
    _reconstruct_conn(tree, tables, owner, w, tree.root, int(k0) + 1, int(g0) + 1, colors)
    stats = {"cells": cells, "elapsed_ms": (time.perf_counter() - t0) * 1000}
    res = make_result(instance, colors, "connected-tree", True, stats)
    if res.cost != int(total):
        raise AssertionError(f"connected-tree witness costs {res.cost}, table says {total}")
    return res


def _exclude_min(t: np.ndarray, K: int) -> np.ndarray:
    """``out[k-1, :] = min over k' != k of t[k'-1, :]`` for k = 1..K."""
    rows = t.shape[0]
    order = np.argsort(t, axis=0, kind="stable")
    first = np.take_along_axis(t, order[:1], axis=0)[0]
    second = np.take_along_axis(t, order[1:2], axis=0)[0] if rows > 1 else np.full(t.shape[1], INF)
    out = np.tile(first, (K, 1))
    arg = order[0]
    cols = np.nonzero(arg < K)[0]
    out[arg[cols], cols] = second[cols]
    return out


def _reconstruct_conn(tree, tables, owner, w, v, k, g, colors) -> None:
    stack = [(v, k, g)]
    while stack:
        v, k, g = stack.pop()
        colors[v] = k
        j = owner[v]
        same = [u for u in tree.children[v] if owner[u] == j]
        other = [u for u in tree.children[v] if owner[u] != j]
        choice: dict[int, tuple[int, int]] = {}
        for u in other:
            fu = tables[u].copy()
            if k - 1 < fu.shape[0]:
                fu[k - 1, :] = INF
            a, b = np.unravel_index(int(np.argmin(fu)), fu.shape)
            choice[u] = (int(a) + 1, int(b) + 1)
        best_fit: dict[int, tuple[float, int, int]] = {}
        for u in same:
            fu = tables[u].copy()
            if k - 1 < fu.shape[0]:
                fu[k - 1, :] = INF
            adj = fu[:, :g] - w[j] * np.arange(1, g + 1)[None, :]
            a, b = np.unravel_index(int(np.argmin(adj)), adj.shape)
            best_fit[u] = (float(adj[a, b]), int(a) + 1, int(b) + 1)
            choice[u] = (int(a) + 1, int(b) + 1)
        if k < g:
            best_u, best_gain, best_k = -1, INF, -1
            for u in same:
                fu = tables[u]
                col = fu[:, g - 1].copy() if g - 1 < fu.shape[1] else np.full(fu.shape[0], INF)
                if k - 1 < col.shape[0]:
                    col[k - 1] = INF
                kk = int(np.argmin(col))
                gain = col[kk] - best_fit[u][0]
                if gain < best_gain:
                    best_u, best_gain, best_k = u, gain, kk + 1
            choice[best_u] = (best_k, g)
        for u, (a, b) in choice.items():
            stack.append((u, a, b))


# ---------------------------------------------------------------------------
# paths with subpath bundles


def path_order(graph: Graph) -> list[int]:
    """Vertices of a path graph from the smaller-id endpoint to the other."""
    n = graph.n
    if n == 1:
        return [0]
    ends = [v for v in range(n) if graph.degree(v) == 1]
    if len(graph.edges) != n - 1 or graph.max_degree > 2 or len(ends) != 2:
        raise UnsupportedInstanceError("graph is not a path")
    order = [min(ends)]
    prev = -1
    while len(order) < n:
        v = order[-1]
        nxt = [u for u in graph.adjacency[v] if u != prev]
        if not nxt:
            raise UnsupportedInstanceError("graph is not a path")
        prev = v
        order.append(nxt[0])
    return order


def solve_connected_path(instance: Instance) -> SolveResult:
    """Paths whose bundles are subpaths, overlapping allowed. O(n^2 + n|B|).

    Positions are 1-based along the path. In any state at position ``i``
    either ``p == i`` (color 2 at ``v_i``), ``q == i`` (color 3), or
    ``v_i`` has color 1 and ``max(p, q) == i - 1``. The four arrays below
    hold exactly those states, indexed by the free last-position:

    * ``one2[q]``: ``c(v_i)=1``, ``p=i-1``
    * ``one3[p]``: ``c(v_i)=1``, ``q=i-1``
    * ``two[q]``:  ``c(v_i)=2``, ``p=i``
    * ``three[p]``: ``c(v_i)=3``, ``q=i``

    At ``i = 1`` the lone color-1 state ``p = q = 0`` sits in ``one2[0]``.
    """
    require_valid(instance)
    t0 = time.perf_counter()
    order = path_order(instance.graph)
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order, start=1):
        pos[v] = i
    intervals = []
    for b in instance.bundles:
        ps = sorted(pos[v] for v in b.members)
        if ps[-1] - ps[0] + 1 != len(ps):
            raise UnsupportedInstanceError(f"bundle {b.index} is not a subpath")
        intervals.append((ps[0], ps[-1], b.weight))

    start_w = np.zeros(n + 2)  # total weight of bundles with left == i
    by_left = [[] for _ in range(n + 2)]
    ends_at = [[] for _ in range(n + 2)]
    for lo, hi, wt in intervals:
        start_w[lo] += wt
        by_left[lo].append((hi, wt))
        ends_at[hi].append((lo, wt))
    # live[l]: weight of bundles with left l that contain the current v_i, for l < i
    live = np.zeros(n + 1)

    size = n + 1
    one2 = np.full(size, INF)
    one3 = np.full(size, INF)
    two = np.full(size, INF)
    three = np.full(size, INF)
    W1 = start_w[1]
    one2[0], two[0], three[0] = W1, 2 * W1, 3 * W1
    back: list[tuple] = [()]  # back[i - 1] belongs to position i

    for i in range(2, n + 1):
        # bundles with left == i-1 that reach v_i become live; those ending at i-1 die
        for hi, wt in by_left[i - 1]:
            if hi >= i:
                live[i - 1] += wt
        for lo, wt in ends_at[i - 1]:
            if lo < i - 1:
                live[lo] -= wt
        # S[a] = sum of live[l] for a < l <= i-1
        csum = np.cumsum(live[::-1])[::-1]  # csum[l] = sum_{x >= l} live[x]
        S = np.zeros(size)
        S[: size - 1] = csum[1:size]
        Wi = start_w[i]
        s_im2 = S[i - 2]

        a3 = int(np.argmin(three[: i - 1]))
        m3 = three[a3]
        a1b = int(np.argmin(one3[: i - 1]))
        m1b = one3[a1b]
        plus = one2[: i - 1] + S[: i - 1]
        a1a = int(np.argmin(plus))
        m1a = plus[a1a]
        plus2 = two[: i - 1] + S[: i - 1]
        a2 = int(np.argmin(plus2))
        m2 = plus2[a2]

        n_one2 = np.full(size, INF)
        n_one3 = np.full(size, INF)
        n_two = np.full(size, INF)
        n_three = np.full(size, INF)
        n_one2[: i - 1] = two[: i - 1] + Wi
        n_one3[: i - 1] = three[: i - 1] + Wi

        n_two[: i - 1] = one2[: i - 1] + s_im2 + 2 * Wi
        pick_b2 = m1b + s_im2 + 2 * Wi < n_two[i - 2]
        if pick_b2:
            n_two[i - 2] = m1b + s_im2 + 2 * Wi
        n_two[i - 1] = m3 + 2 * Wi

        n_three[: i - 1] = one3[: i - 1] + 2 * s_im2 + 3 * Wi
        pick_a3 = m1a + s_im2 + 3 * Wi < n_three[i - 2]
        if pick_a3:
            n_three[i - 2] = m1a + s_im2 + 3 * Wi
        n_three[i - 1] = m2 + 3 * Wi

        back.append((a3, a1b, pick_b2, a1a, pick_a3, a2))
        one2, one3, two, three = n_one2, n_one3, n_two, n_three

    finals = [one2, one3, two, three]
    total, kind, at = INF, -1, -1
    for kd, arr in enumerate(finals):
        a = int(np.argmin(arr))
        if arr[a] < total:
            total, kind, at = arr[a], kd, a
    seq = [0] * (n + 1)
    for i in range(n, 1, -1):
        a3, a1b, pick_b2, a1a, pick_a3, a2 = back[i - 1]
        if kind == 0:
            seq[i], kind = 1, 2
        elif kind == 1:
            seq[i], kind = 1, 3
        elif kind == 2:
            seq[i] = 2
            if at == i - 1:
                kind, at = 3, a3
            elif at == i - 2 and pick_b2:
                kind, at = 1, a1b
            else:
                kind = 0
        else:
            seq[i] = 3
            if at == i - 1:
                kind, at = 2, a2
            elif at == i - 2 and pick_a3:
                kind, at = 0, a1a
            else:
                kind = 1
    seq[1] = {0: 1, 1: 1, 2: 2, 3: 3}[kind]
    colors = [0] * n
    for v in range(n):
        colors[v] = seq[pos[v]]
    stats = {"cells": 4 * n * n, "elapsed_ms": (time.perf_counter() - t0) * 1000}
    res = make_result(instance, colors, "connected-path", True, stats)
    if res.cost != int(total):
        raise AssertionError(f"connected-path witness costs {res.cost}, table says {total}")
    return res
