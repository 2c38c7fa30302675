"""Matroids and minimum-weight common independent sets.

The solver grows a common independent set one element at a time, each
round augmenting along a minimum-cost source-to-sink path in the exchange
digraph (cheapest total cost, then fewest arcs).  That path keeps the
intermediate sets extreme, which is what makes the greedy rounds globally
optimal.

Exchange arcs come in two bundles per round.  For y outside I that the
first matroid cannot absorb directly, arcs run from each element of the
circuit of I + y into y; when I + y is independent the arcs from all of I
are encoded through a shared hub node instead of materializing |I| arcs.
The second matroid contributes the mirrored arcs out of y.  Arc costs
charge +w(y) for entering the set and -w(x) for leaving it, and every
real arc also counts one step for the tie-break; hub hops are free and
stepless on entry so a hub-routed exchange still costs exactly one step.
"""

from __future__ import annotations

from typing import Iterable, Protocol, Sequence

import numpy as np

from .errors import GroundSetMismatchError
from .graph import WeightedGraph


class ExchangeContext(Protocol):
    def addable(self, y: int) -> bool:
        """Is I + y independent?"""

    def swap_candidates(self, y: int) -> Sequence[int]:
        """Elements x of I with I - x + y independent, for dependent I + y."""


class Matroid:
    """Base class; subclasses supply ``ground_size`` and ``is_independent``.

    ``prepare`` returns a per-round exchange context.  The default one
    answers queries with independence tests alone, so any subclass is
    usable, just slower.
    """

    ground_size: int

    def is_independent(self, selection: Iterable[int]) -> bool:
        raise NotImplementedError

    def rank(self, subset: Iterable[int] | None = None) -> int:
        pool = sorted(subset) if subset is not None else range(self.ground_size)
        picked: list[int] = []
        for x in pool:
            picked.append(x)
            if not self.is_independent(picked):
                picked.pop()
        return len(picked)

    def prepare(self, selection: Sequence[int]) -> ExchangeContext:
        return _GenericContext(self, list(selection))


class _GenericContext:
    def __init__(self, m: Matroid, selection: list[int]):
        self.m = m
        self.selection = selection

    def addable(self, y: int) -> bool:
        return self.m.is_independent(self.selection + [y])

    def swap_candidates(self, y: int) -> list[int]:
        out = []
        for i, x in enumerate(self.selection):
            trial = self.selection[:i] + self.selection[i + 1 :] + [y]
            if self.m.is_independent(trial):
                out.append(x)
        return out


class GraphicMatroid(Matroid):
    """Forests of a graph; ground elements are the graph's edge indices."""

    def __init__(self, graph: WeightedGraph):
        self.graph = graph
        self.ground_size = graph.edge_count

    def is_independent(self, selection: Iterable[int]) -> bool:
        parent = list(range(self.graph.vertex_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in selection:
            u, v, _ = self.graph.edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def prepare(self, selection: Sequence[int]) -> "_ForestContext":
        return _ForestContext(self.graph, selection)


class _ForestContext:
    """Rooted-forest view of an independent edge set.

    The circuit of I + y is y plus the tree path between y's endpoints,
    found by walking parent pointers.
    """

    def __init__(self, graph: WeightedGraph, selection: Sequence[int]):
        self.graph = graph
        n = graph.vertex_count
        self.comp = [-1] * n
        self.parent_vertex = [-1] * n
        self.parent_edge = [-1] * n
        self.depth = [0] * n
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i in selection:
            u, v, _ = graph.edges[i]
            adj[u].append((v, i))
            adj[v].append((u, i))
        for r in range(n):
            if self.comp[r] != -1:
                continue
            self.comp[r] = r
            stack = [r]
            while stack:
                x = stack.pop()
                for y, e in adj[x]:
                    if self.comp[y] == -1:
                        self.comp[y] = r
                        self.parent_vertex[y] = x
                        self.parent_edge[y] = e
                        self.depth[y] = self.depth[x] + 1
                        stack.append(y)

    def addable(self, y: int) -> bool:
        u, v, _ = self.graph.edges[y]
        return self.comp[u] != self.comp[v]

    def swap_candidates(self, y: int) -> list[int]:
        u, v, _ = self.graph.edges[y]
        path = []
        while u != v:
            if self.depth[u] < self.depth[v]:
                u, v = v, u
            path.append(self.parent_edge[u])
            u = self.parent_vertex[u]
        return path


class PartitionMatroid(Matroid):
    """At most ``capacities[i]`` elements from ``parts[i]``.

    The parts must partition the ground set exactly.
    """

    def __init__(self, parts: Sequence[Iterable[int]], capacities: Sequence[int]):
        self.parts = tuple(frozenset(p) for p in parts)
        self.capacities = tuple(int(c) for c in capacities)
        if len(self.parts) != len(self.capacities):
            raise ValueError("one capacity per part")
        if any(c < 0 for c in self.capacities):
            raise ValueError("capacities must be nonnegative")
        self.ground_size = sum(len(p) for p in self.parts)
        self.part_of: dict[int, int] = {}
        for i, p in enumerate(self.parts):
            for x in p:
                if x in self.part_of:
                    raise ValueError(f"element {x} appears in two parts")
                self.part_of[x] = i
        if set(self.part_of) != set(range(self.ground_size)):
            raise ValueError("parts must partition 0..ground_size-1")

    def is_independent(self, selection: Iterable[int]) -> bool:
        counts = [0] * len(self.parts)
        for x in selection:
            i = self.part_of[x]
            counts[i] += 1
            if counts[i] > self.capacities[i]:
                return False
        return True

    def prepare(self, selection: Sequence[int]) -> "_PartitionContext":
        return _PartitionContext(self, selection)


class _PartitionContext:
    def __init__(self, m: PartitionMatroid, selection: Sequence[int]):
        self.m = m
        self.counts = [0] * len(m.parts)
        self.members: list[list[int]] = [[] for _ in m.parts]
        for x in selection:
            i = m.part_of[x]
            self.counts[i] += 1
            self.members[i].append(x)

    def addable(self, y: int) -> bool:
        i = self.m.part_of[y]
        return self.counts[i] < self.m.capacities[i]

    def swap_candidates(self, y: int) -> list[int]:
        # The circuit of I + y is y plus I's elements in y's part.
        return self.members[self.m.part_of[y]]


def free_matroid(ground_size: int) -> PartitionMatroid:
    """Every subset independent."""
    return PartitionMatroid([range(ground_size)], [ground_size])


class TruncatedMatroid(Matroid):
    """The inner matroid with rank capped at k."""

    def __init__(self, inner: Matroid, k: int):
        if k < 0:
            raise ValueError("truncation rank must be nonnegative")
        self.inner = inner
        self.k = k
        self.ground_size = inner.ground_size

    def is_independent(self, selection: Iterable[int]) -> bool:
        sel = list(selection)
        return len(sel) <= self.k and self.inner.is_independent(sel)

    def prepare(self, selection: Sequence[int]) -> "_TruncatedContext":
        return _TruncatedContext(self, selection)


class _TruncatedContext:
    def __init__(self, m: TruncatedMatroid, selection: Sequence[int]):
        self.at_cap = len(selection) >= m.k
        self.selection = list(selection)
        self.inner = m.inner.prepare(selection)

    def addable(self, y: int) -> bool:
        return not self.at_cap and self.inner.addable(y)

    def swap_candidates(self, y: int) -> Sequence[int]:
        if self.at_cap and self.inner.addable(y):
            # At the cap the circuit of I + y is all of I + y.
            return self.selection
        return self.inner.swap_candidates(y)


def truncate(m: Matroid, k: int) -> TruncatedMatroid:
    return TruncatedMatroid(m, k)


_UNREACHED = np.int64(2) ** 62


def _relax_to_fixpoint(
    node_count: int, src: np.ndarray, dst: np.ndarray, arc_key: np.ndarray
) -> np.ndarray:
    """Shortest combined keys from the last node over the given arcs.

    Vectorized Bellman-Ford: arcs are pre-sorted by destination, so one
    pass is a gather, an add, and a grouped minimum.  The exchange digraph
    of an extreme selection has no negative-cost cycle, hence the pass
    bound; exceeding it means a bug, not a slow input.
    """
    dist = np.full(node_count, _UNREACHED, dtype=np.int64)
    dist[node_count - 1] = 0
    uniq, starts = np.unique(dst, return_index=True)
    for _ in range(node_count + 1):
        cand = np.where(dist[src] >= _UNREACHED, _UNREACHED, dist[src] + arc_key)
        grouped = np.minimum.reduceat(cand, starts)
        cur = dist[uniq]
        improved = grouped < cur
        if not improved.any():
            return dist
        dist[uniq] = np.where(improved, grouped, cur)
    raise AssertionError("negative-cost cycle in exchange digraph")


def min_weight_common_base(
    m1: Matroid,
    m2: Matroid,
    weights: Sequence[int],
    k: int,
) -> frozenset[int] | None:
    """Minimum-weight set of size k independent in both matroids, or None
    when no common independent set reaches that size.

    k rounds of shortest augmenting paths; see the module docstring for
    the arc construction.  Combined integer keys order paths by cost and
    then by arc count, and path reconstruction breaks remaining ties
    toward smaller node ids, so the result is deterministic.
    """
    if m1.ground_size != m2.ground_size:
        raise GroundSetMismatchError(
            f"ground sets of size {m1.ground_size} and {m2.ground_size}"
        )
    g = m1.ground_size
    if len(weights) != g:
        raise GroundSetMismatchError(f"{len(weights)} weights for {g} elements")
    if k < 0:
        raise ValueError("size must be nonnegative")
    if k > g:
        return None

    hub1, hub2, src_node = g, g + 1, g + 2
    node_count = g + 3
    scale = 2 * g + 4  # longer than any simple path's arc count
    in_set = [False] * g
    selection: list[int] = []

    for _ in range(k):
        ctx1 = m1.prepare(selection)
        ctx2 = m2.prepare(selection)
        a_src: list[int] = []
        a_dst: list[int] = []
        a_key: list[int] = []

        def arc(s: int, d: int, key: int) -> None:
            a_src.append(s)
            a_dst.append(d)
            a_key.append(key)

        sinks: list[int] = []
        any_source = False
        for y in range(g):
            if in_set[y]:
                continue
            enter = weights[y] * scale + 1
            if ctx1.addable(y):
                any_source = True
                arc(src_node, y, enter)
                if selection:
                    arc(hub1, y, enter)
            else:
                for x in ctx1.swap_candidates(y):
                    arc(x, y, enter)
            if ctx2.addable(y):
                sinks.append(y)
                if selection:
                    arc(y, hub2, 0)
            else:
                for x in ctx2.swap_candidates(y):
                    arc(y, x, -weights[x] * scale + 1)
        for x in selection:
            arc(x, hub1, 0)
            arc(hub2, x, -weights[x] * scale + 1)
        if not any_source or not sinks:
            return None

        # Sort by destination, then by source inside each group, so the
        # fixpoint pass can group by destination and the predecessor walk
        # meets candidates in ascending source order.
        src_a = np.asarray(a_src, dtype=np.int64)
        dst_a = np.asarray(a_dst, dtype=np.int64)
        key_a = np.asarray(a_key, dtype=np.int64)
        order = np.argsort(dst_a * node_count + src_a, kind="stable")
        src_a, dst_a, key_a = src_a[order], dst_a[order], key_a[order]
        dist = _relax_to_fixpoint(node_count, src_a, dst_a, key_a)

        best_sink = -1
        for y in sinks:
            if dist[y] < _UNREACHED and (best_sink == -1 or dist[y] < dist[best_sink]):
                best_sink = y
        if best_sink == -1:
            return None

        # Walk tight predecessors back to the source; ties go to the
        # smallest source id.  Combined keys make every such walk a simple
        # path.
        uniq, starts = np.unique(dst_a, return_index=True)
        bounds = np.append(starts, len(dst_a))
        node = best_sink
        toggled: list[int] = []
        while node != src_node:
            if node < g:
                toggled.append(node)
            gi = int(np.searchsorted(uniq, node))
            pred = -1
            for idx in range(int(bounds[gi]), int(bounds[gi + 1])):
                s = int(src_a[idx])
                if dist[s] < _UNREACHED and dist[s] + key_a[idx] == dist[node]:
                    pred = s
                    break
            assert pred != -1, "shortest-path keys admit no predecessor"
            node = pred
        for x in toggled:
            in_set[x] = not in_set[x]
        selection = [x for x in range(g) if in_set[x]]

    assert m1.is_independent(selection) and m2.is_independent(selection)
    return frozenset(selection)
