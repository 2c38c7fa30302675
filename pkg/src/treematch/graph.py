"""Core graph types: weighted simple graphs, edge subsets, bipartitions,
and spanning-tree views.

All types are immutable value objects.  Vertices are the integers
``0 .. vertex_count - 1``.  An edge's identity is its index into
``WeightedGraph.edges``; subsets of edges are plain ``frozenset[int]``
values over those indices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    GraphFormatError,
    NotATreeError,
    NotBipartiteError,
)

# Subset of edge indices of some host WeightedGraph.
EdgeSet = frozenset[int]

# A cycle written as a sequence of distinct vertices; consecutive entries
# (cyclically) must be adjacent in the host graph.
VertexCycle = tuple[int, ...]

PLUS = 0
MINUS = 1


@dataclass(frozen=True)
class WeightedGraph:
    """A simple undirected graph with integer edge weights.

    Edges are normalized to ``(u, v, weight)`` with ``u < v`` and kept in
    construction order.  Self-loops and parallel edges are rejected.
    """

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        if not isinstance(vertex_count, int) or vertex_count < 1:
            raise ValueError(f"vertex count must be a positive integer, got {vertex_count!r}")
        normalized: list[tuple[int, int, int]] = []
        seen: set[tuple[int, int]] = set()
        for item in edges:
            if len(item) == 2:
                u, v = item  # type: ignore[misc]
                w = 0
            elif len(item) == 3:
                u, v, w = item  # type: ignore[misc]
            else:
                raise ValueError(f"edge must be (u, v) or (u, v, w), got {item!r}")
            if not (isinstance(u, int) and isinstance(v, int) and isinstance(w, int)):
                raise ValueError(f"edge entries must be integers, got {item!r}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {item!r} uses a vertex outside 0..{vertex_count - 1}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"parallel edge {{{u}, {v}}}")
            seen.add((u, v))
            normalized.append((u, v, w))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(normalized))

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex: ``(edge_index, neighbor)`` pairs in ascending edge index."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v, _) in enumerate(self.edges):
            adj[u].append((i, v))
            adj[v].append((i, u))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def _index_of(self) -> dict[tuple[int, int], int]:
        return {(u, v): i for i, (u, v, _) in enumerate(self.edges)}

    def edge_index(self, u: int, v: int) -> int:
        """Index of the edge {u, v}; KeyError if absent."""
        if u > v:
            u, v = v, u
        return self._index_of[(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._index_of

    def endpoints(self, edge: int) -> tuple[int, int]:
        u, v, _ = self.edges[edge]
        return u, v

    def weight(self, edge: int) -> int:
        return self.edges[edge][2]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def total_weight(self, edge_set: Iterable[int]) -> int:
        return sum(self.edges[i][2] for i in edge_set)

    def edge_pairs(self, edge_set: Iterable[int]) -> list[tuple[int, int]]:
        """Endpoint pairs of an edge subset, sorted for stable output."""
        return sorted((self.edges[i][0], self.edges[i][1]) for i in edge_set)

    def with_added_edges(self, new_edges: Iterable[Sequence[int]]) -> "WeightedGraph":
        """A new graph with extra edges appended after the existing ones."""
        return WeightedGraph(self.vertex_count, list(self.edges) + list(new_edges))


@dataclass(frozen=True)
class Bipartition:
    """A proper 2-coloring; ``side[v]`` is PLUS (0) or MINUS (1).

    Canonical form: the smallest vertex of every connected component is on
    the PLUS side.
    """

    side: tuple[int, ...]

    @property
    def size_plus(self) -> int:
        return self.side.count(PLUS)

    @property
    def size_minus(self) -> int:
        return self.side.count(MINUS)

    @property
    def is_balanced(self) -> bool:
        return self.size_plus == self.size_minus

    def vertices_on(self, side: int) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s == side)


@dataclass(frozen=True)
class BipartitionedTree:
    """A spanning tree of its graph together with the tree's 2-coloring.

    The coloring is canonicalized so vertex 0 is on the PLUS side.
    ``degree[v]`` is the degree of v within the tree.
    """

    graph: WeightedGraph
    edges: EdgeSet
    bipartition: Bipartition
    degree: tuple[int, ...]

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Tree-only adjacency: per vertex ``(edge_index, neighbor)`` pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.graph.vertex_count)]
        for i in sorted(self.edges):
            u, v, _ = self.graph.edges[i]
            adj[u].append((i, v))
            adj[v].append((i, u))
        return tuple(tuple(a) for a in adj)

    @property
    def total_weight(self) -> int:
        return self.graph.total_weight(self.edges)

    def side_of(self, v: int) -> int:
        return self.bipartition.side[v]

    def leaves_on(self, side: int) -> tuple[int, ...]:
        return tuple(
            v
            for v in range(self.graph.vertex_count)
            if self.bipartition.side[v] == side and self.degree[v] == 1
        )


# -- operations ------------------------------------------------------------


def connected_components(g: WeightedGraph) -> list[list[int]]:
    """Vertex sets of the connected components.

    Components are ordered by their smallest vertex; vertices within a
    component are sorted ascending.
    """
    seen = [False] * g.vertex_count
    comps: list[list[int]] = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for _, y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comp.sort()
        comps.append(comp)
    return comps


def is_connected(g: WeightedGraph) -> bool:
    return len(connected_components(g)) == 1


def _odd_cycle_witness(parent: list[int], depth: list[int], u: int, v: int) -> VertexCycle:
    # u and v are in the same BFS layer parity; walk both up to the meeting
    # point to close an odd cycle.
    pu, pv = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        pu.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        pv.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        pu.append(a)
        pv.append(b)
    # Both walks end at the common ancestor; keep it once.
    return tuple(list(reversed(pu)) + pv[:-1])


def bipartition_of(g: WeightedGraph) -> Bipartition:
    """Proper 2-coloring of g, smallest vertex of each component on PLUS.

    Raises NotBipartiteError carrying a witness odd cycle otherwise.
    """
    side = [-1] * g.vertex_count
    parent = [-1] * g.vertex_count
    depth = [0] * g.vertex_count
    for start in range(g.vertex_count):
        if side[start] != -1:
            continue
        side[start] = PLUS
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for _, y in g.adjacency[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
                elif side[y] == side[x]:
                    raise NotBipartiteError(_odd_cycle_witness(parent, depth, x, y))
    return Bipartition(tuple(side))


def as_bipartitioned_tree(g: WeightedGraph, tree_edges: Iterable[int]) -> BipartitionedTree:
    """View an edge subset as a spanning tree with its 2-coloring.

    Raises NotATreeError if the subset does not form a spanning tree.
    """
    edges = frozenset(tree_edges)
    n = g.vertex_count
    for i in edges:
        if not (0 <= i < g.edge_count):
            raise NotATreeError(f"edge index {i} out of range")
    if len(edges) != n - 1:
        raise NotATreeError(f"spanning tree needs {n - 1} edges, got {len(edges)}")
    adj: list[list[int]] = [[] for _ in range(n)]
    degree = [0] * n
    for i in edges:
        u, v, _ = g.edges[i]
        adj[u].append(v)
        adj[v].append(u)
        degree[u] += 1
        degree[v] += 1
    side = [-1] * n
    side[0] = PLUS
    queue = deque([0])
    reached = 1
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if side[y] == -1:
                side[y] = 1 - side[x]
                reached += 1
                queue.append(y)
    if reached != n:
        # n-1 edges but not spanning: there is a cycle somewhere.
        raise NotATreeError("edge set does not span all vertices")
    return BipartitionedTree(g, edges, Bipartition(tuple(side)), tuple(degree))


def is_hamiltonian_cycle(g: WeightedGraph, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` lists every vertex once and consecutive entries
    (including last back to first) are adjacent in g."""
    n = g.vertex_count
    if n < 3 or len(cycle) != n:
        return False
    if len(set(cycle)) != n or not all(0 <= v < n for v in cycle):
        return False
    return all(g.has_edge(cycle[k - 1], cycle[k]) for k in range(n))


# -- text format -----------------------------------------------------------
#
#   c optional comments
#   p <vertex-count> <edge-count>
#   e <u> <v> [<weight>]        (weight omitted means 0)


def parse_graph(text: str) -> WeightedGraph:
    n = -1
    m = -1
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n != -1:
                raise GraphFormatError("duplicate p line", lineno)
            if len(parts) != 3:
                raise GraphFormatError("p line must be 'p <n> <m>'", lineno)
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("p line must be 'p <n> <m>'", lineno) from None
            if n < 1 or m < 0:
                raise GraphFormatError(f"bad sizes n={n} m={m}", lineno)
        elif parts[0] == "e":
            if n == -1:
                raise GraphFormatError("e line before p line", lineno)
            if len(parts) not in (3, 4):
                raise GraphFormatError("e line must be 'e <u> <v> [<w>]'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
                w = int(parts[3]) if len(parts) == 4 else 0
            except ValueError:
                raise GraphFormatError("e line must hold integers", lineno) from None
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex out of range in edge {u} {v}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"parallel edge {{{key[0]}, {key[1]}}}", lineno)
            seen.add(key)
            edges.append((u, v, w))
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", lineno)
    if n == -1:
        raise GraphFormatError("missing p line")
    if len(edges) != m:
        raise GraphFormatError(f"p line announced {m} edges, file holds {len(edges)}")
    return WeightedGraph(n, edges)


def format_graph(g: WeightedGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"c {part}")
    lines.append(f"p {g.vertex_count} {g.edge_count}")
    for u, v, w in sorted(g.edges):
        lines.append(f"e {u} {v} {w}" if w != 0 else f"e {u} {v}")
    return "\n".join(lines) + "\n"


def load_graph(path) -> WeightedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(g: WeightedGraph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g, comment))
