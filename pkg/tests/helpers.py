"""Shared test utilities: mask-indexed small graphs, Prüfer decoding, and
seeded random instance builders used across the suite."""

from __future__ import annotations

import random
from itertools import combinations

from treematch import WeightedGraph


def pairs_of(n: int) -> list[tuple[int, int]]:
    """Vertex pairs of K_n in lexicographic order; bit b of a mask refers
    to pairs_of(n)[b] everywhere in the tests."""
    return list(combinations(range(n), 2))


def graph_from_mask(
    n: int, mask: int, pairs: list[tuple[int, int]] | None = None, weight: int = 1
) -> WeightedGraph:
    ps = pairs if pairs is not None else pairs_of(n)
    return WeightedGraph(
        n, [(u, v, weight) for b, (u, v) in enumerate(ps) if mask >> b & 1]
    )


def prufer_tree(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Decode a Prüfer sequence (length n-2, entries in 0..n-1) into the
    edge list of the tree it encodes."""
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if deg[v] == 1)
        edges.append((min(leaf, x), max(leaf, x)))
        deg[leaf] = 0
        deg[x] -= 1
    u, v = (v for v in range(n) if deg[v] == 1)
    edges.append((u, v))
    return edges


def random_tree_edges(rng: random.Random, n: int) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    return prufer_tree(tuple(rng.randrange(n) for _ in range(n - 2)), n)


def random_connected_bipartite(
    rng: random.Random, side: int, target_edges: int, wmax: int = 9
) -> WeightedGraph:
    """Connected balanced bipartite graph on 2*side vertices with about
    target_edges edges: a random spanning tree of K_{side,side} plus random
    crossing fill, weights uniform in 0..wmax."""
    n = 2 * side
    # Random spanning tree over the crossing pairs: attach each vertex
    # (in random order) to a random already-placed vertex of the other side.
    order = list(range(n))
    rng.shuffle(order)
    placed_by_side: tuple[list[int], list[int]] = ([], [])
    chosen: set[tuple[int, int]] = set()
    for v in order:
        s = 0 if v < side else 1
        other = placed_by_side[1 - s]
        if other:
            u = rng.choice(other)
            chosen.add((min(u, v), max(u, v)))
        placed_by_side[s].append(v)
    # The attachment loop can strand the first vertex of each side before
    # the other side has anyone; stitch remaining components together.
    crossing = [(u, side + v) for u in range(side) for v in range(side)]
    rng.shuffle(crossing)
    for u, v in crossing:
        if len(chosen) >= n - 1:
            break
        comp = _components_of(n, chosen)
        if comp[u] != comp[v]:
            chosen.add((u, v))
    for u, v in crossing:
        if len(chosen) >= target_edges:
            break
        chosen.add((u, v))
    return WeightedGraph(
        n, [(u, v, rng.randint(0, wmax)) for u, v in sorted(chosen)]
    )


def _components_of(n: int, edge_pairs: set[tuple[int, int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edge_pairs:
        parent[find(u)] = find(v)
    return [find(v) for v in range(n)]


def random_subcubic(rng: random.Random, n: int, tries: int = 60) -> WeightedGraph:
    """Random graph with maximum degree at most three (weights all 1)."""
    deg = [0] * n
    chosen: list[tuple[int, int]] = []
    pool = pairs_of(n)
    rng.shuffle(pool)
    for u, v in pool[:tries]:
        if deg[u] < 3 and deg[v] < 3:
            chosen.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return WeightedGraph(n, [(u, v, 1) for u, v in chosen])
