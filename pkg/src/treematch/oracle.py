"""Brute-force reference implementations.

Everything here is written for independence from the production solvers,
not for speed: spanning trees are enumerated by explicit include/exclude
recursion, matchings by subset dynamic programming, augmentation optima by
branch and bound over candidate edge sets, and SAT by assignment scan.
Tests freeze values computed by these routines and compare the fast paths
against them.

The one concession to scale is ``sb_tree_search``, a pruned backtracking
search over edge in/out decisions used when plain enumeration cannot
finish.  Its pruning rules only ever discard spanning trees that are not
strongly balanced, so its optima agree with plain enumeration.
"""

from __future__ import annotations

import sys
from collections import deque
from typing import Callable, Iterable, Sequence

from .errors import (
    DisconnectedError,
    OddVertexCountError,
    TooLargeError,
    TruncatedError,
)
from .graph import EdgeSet, WeightedGraph, connected_components
from .pmst import HostKind

DEFAULT_TREE_CAP = 10_000_000
DEFAULT_NODE_CAP = 20_000_000


# ---------------------------------------------------------------------------
# Spanning-tree enumeration


def enumerate_spanning_trees(
    g: WeightedGraph,
    visit: Callable[[tuple[int, ...]], None] | None = None,
    cap: int = DEFAULT_TREE_CAP,
) -> int:
    """Visit every spanning tree of g (as a sorted tuple of edge indices)
    and return their number.

    Trees are produced in lexicographic order of their index tuples.  An
    edge is included or excluded in index order; the exclude branch is
    taken only when the remaining edges still span, so every leaf of the
    recursion is a tree.  Raises TruncatedError past ``cap`` trees and
    DisconnectedError when no spanning tree exists.
    """
    n, m = g.vertex_count, g.edge_count
    if len(connected_components(g)) != 1:
        raise DisconnectedError("graph has no spanning tree")
    if n == 1:
        if visit is not None:
            visit(())
        return 1
    ends_u = [e[0] for e in g.edges]
    ends_v = [e[1] for e in g.edges]
    parent = list(range(n))
    size = [1] * n
    chosen: list[int] = []
    count = 0
    scratch = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def spans_without(skip_upto: int) -> bool:
        # Do chosen + edges[skip_upto:] still connect everything?
        for v in range(n):
            scratch[v] = v

        def sfind(x: int) -> int:
            while scratch[x] != x:
                scratch[x] = scratch[scratch[x]]
                x = scratch[x]
            return x

        comps = n
        for i in chosen:
            ru, rv = sfind(ends_u[i]), sfind(ends_v[i])
            if ru != rv:
                scratch[ru] = rv
                comps -= 1
        for i in range(skip_upto, m):
            if comps == 1:
                return True
            ru, rv = sfind(ends_u[i]), sfind(ends_v[i])
            if ru != rv:
                scratch[ru] = rv
                comps -= 1
        return comps == 1

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * m + 100))

    def rec(i: int) -> None:
        nonlocal count
        if len(chosen) == n - 1:
            count += 1
            if count > cap:
                raise TruncatedError(f"more than {cap} spanning trees")
            if visit is not None:
                visit(tuple(chosen))
            return
        if i == m:
            return
        ru, rv = find(ends_u[i]), find(ends_v[i])
        if ru == rv:
            rec(i + 1)
            return
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        parent[rv] = ru
        size[ru] += size[rv]
        chosen.append(i)
        rec(i + 1)
        chosen.pop()
        size[ru] -= size[rv]
        parent[rv] = rv
        if spans_without(i + 1):
            rec(i + 1)

    rec(0)
    return count


def spanning_tree_count_determinant(g: WeightedGraph) -> int:
    """Number of spanning trees via an exact integer determinant of a
    Laplacian minor (Bareiss elimination).  Cross-checks the enumerator."""
    n = g.vertex_count
    if n == 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v, _ in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    a = [row[1:] for row in lap[1:]]
    k = n - 1
    prev = 1
    for col in range(k - 1):
        if a[col][col] == 0:
            swap = next((r for r in range(col + 1, k) if a[r][col] != 0), None)
            if swap is None:
                return 0
            a[col], a[swap] = a[swap], a[col]
            # A row swap flips the determinant's sign; negating one row
            # flips it back.
            a[swap] = [-x for x in a[swap]]
        for r in range(col + 1, k):
            for c in range(col + 1, k):
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) // prev
            a[r][col] = 0
        prev = a[col][col]
    return a[k - 1][k - 1]


# ---------------------------------------------------------------------------
# Tree predicates (local, array-based; deliberately not shared with the
# production modules)


def _tree_has_perfect_matching(n: int, pairs: Sequence[tuple[int, int]]) -> bool:
    if n % 2:
        return False
    deg = [0] * n
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
        adj[u].append(v)
        adj[v].append(u)
    alive = [True] * n
    stack = [v for v in range(n) if deg[v] == 1]
    removed = 0
    while stack:
        leaf = stack.pop()
        if not alive[leaf] or deg[leaf] != 1:
            continue
        partner = next((w for w in adj[leaf] if alive[w]), None)
        if partner is None:
            return False
        alive[leaf] = alive[partner] = False
        removed += 2
        for w in adj[partner]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    return removed == n


def _tree_is_strongly_balanced(n: int, pairs: Sequence[tuple[int, int]]) -> bool:
    """One side of the tree's bipartition has exactly one leaf and all its
    other vertices have degree two."""
    deg = [0] * n
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
        adj[u].append(v)
        adj[v].append(u)
    side = [-1] * n
    side[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if side[y] == -1:
                side[y] = side[x] ^ 1
                queue.append(y)
    for s in (0, 1):
        leaves = 0
        ok = True
        for v in range(n):
            if side[v] != s:
                continue
            if deg[v] == 1:
                leaves += 1
            elif deg[v] != 2:
                ok = False
                break
        if ok and leaves == 1:
            return True
    return False


# ---------------------------------------------------------------------------
# PMST oracle


def brute_force_min_pmst(
    g: WeightedGraph, cap: int = DEFAULT_TREE_CAP
) -> tuple[EdgeSet, int] | None:
    """Minimum-weight spanning tree containing a perfect matching, by
    checking every spanning tree.  None when no tree has one."""
    if len(connected_components(g)) != 1:
        raise DisconnectedError("graph has no spanning tree")
    n = g.vertex_count
    best: tuple[EdgeSet, int] | None = None

    def look(tree: tuple[int, ...]) -> None:
        nonlocal best
        pairs = [(g.edges[i][0], g.edges[i][1]) for i in tree]
        if not _tree_has_perfect_matching(n, pairs):
            return
        w = sum(g.edges[i][2] for i in tree)
        if best is None or w < best[1]:
            best = (frozenset(tree), w)

    enumerate_spanning_trees(g, look, cap)
    return best


# ---------------------------------------------------------------------------
# Strongly balanced spanning tree oracle


class _SbSearch:
    """Backtracking over edge decisions with sound pruning.

    State per edge: undecided / in / out.  A DSU with parity tracks the
    forced 2-coloring of each partial component; per component and per
    color class it records whether the class can still be the plus side
    (no vertex of tree-degree three or more, at most one finalized leaf).
    Out-decisions trigger a bridge pass (bridges of the surviving graph
    are forced in, disconnection prunes); in-decisions that would close a
    cycle are forced out.  When one class of a component dies, vertices of
    the other class are capped at degree two.  Every leaf of the search is
    therefore a spanning tree, checked against the exact one-leaf rule.
    """

    IN = 1
    OUT = 2

    def __init__(self, g: WeightedGraph, node_cap: int):
        self.g = g
        self.n = g.vertex_count
        self.m = g.edge_count
        self.node_cap = node_cap
        self.ends = [(u, v) for u, v, _ in g.edges]
        self.wts = [w for _, _, w in g.edges]
        self.state = [0] * self.m
        self.inc = [0] * self.n
        self.und = [0] * self.n
        for u, v, _ in g.edges:
            self.und[u] += 1
            self.und[v] += 1
        self.parent = list(range(self.n))
        self.par = [0] * self.n  # parity relative to parent
        self.size = [1] * self.n
        self.dead = [[False, False] for _ in range(self.n)]
        self.leaf_cnt = [[0, 0] for _ in range(self.n)]
        self.deg2 = [([], []) for _ in range(self.n)]  # degree-2 vertices per class
        self.trail: list[tuple] = []
        self.in_count = 0
        self.in_weight = 0
        self.und_total = self.m
        self.comp_count = self.n
        self.nodes = 0
        self.dirty = True
        self.queue: deque[tuple[int, int]] = deque()
        self.nonneg = all(w >= 0 for w in self.wts)
        self.best_weight: int | None = None
        self.best_tree: EdgeSet | None = None
        self.find_min = True

    # -- DSU with parity (no path compression; unions are rolled back) --

    def find(self, x: int) -> tuple[int, int]:
        p = 0
        while self.parent[x] != x:
            p ^= self.par[x]
            x = self.parent[x]
        return x, p

    def _union(self, u: int, v: int) -> bool:
        ru, pu = self.find(u)
        rv, pv = self.find(v)
        if ru == rv:
            return False  # cycle; caller treats as conflict
        if self.size[ru] < self.size[rv]:
            ru, rv = rv, ru
            pu, pv = pv, pu
        q = pu ^ pv ^ 1
        la, lb = self.deg2[ru]
        self.trail.append((
            "u", ru, rv,
            self.dead[ru][0], self.dead[ru][1],
            self.leaf_cnt[ru][0], self.leaf_cnt[ru][1],
            len(la), len(lb),
        ))
        self.parent[rv] = ru
        self.par[rv] = q
        self.size[ru] += self.size[rv]
        for c in (0, 1):
            self.dead[ru][c ^ q] = self.dead[ru][c ^ q] or self.dead[rv][c]
            self.leaf_cnt[ru][c ^ q] += self.leaf_cnt[rv][c]
            self.deg2[ru][c ^ q].extend(self.deg2[rv][c])
        self.comp_count -= 1
        if self.dead[ru][0] and self.dead[ru][1]:
            return False
        if self.leaf_cnt[ru][0] >= 2 and not self.dead[ru][0]:
            if not self._mark_dead(ru, 0):
                return False
        if self.leaf_cnt[ru][1] >= 2 and not self.dead[ru][1]:
            if not self._mark_dead(ru, 1):
                return False
        if self.dead[ru][0] != self.dead[ru][1]:
            self._saturate(ru, 1 if self.dead[ru][0] else 0)
        return True

    def _mark_dead(self, root: int, cls: int) -> bool:
        if self.dead[root][cls]:
            return True
        self.trail.append(("k", root, cls))
        self.dead[root][cls] = True
        if self.dead[root][cls ^ 1]:
            return False
        self._saturate(root, cls ^ 1)
        return True

    def _saturate(self, root: int, cls: int) -> None:
        # The surviving class must become the plus side: its degree-2
        # vertices may grow no further.
        for v in self.deg2[root][cls]:
            if self.inc[v] == 2 and self.und[v]:
                for e, _ in self.g.adjacency[v]:
                    if self.state[e] == 0:
                        self.queue.append((e, self.OUT))

    # -- decision application --

    def _decide(self, e: int, val: int) -> bool:
        old = self.state[e]
        if old == val:
            return True
        if old != 0:
            return False
        u, v = self.ends[e]
        self.trail.append(("s", e))
        self.state[e] = val
        self.und[u] -= 1
        self.und[v] -= 1
        self.und_total -= 1
        if val == self.IN:
            self.in_count += 1
            self.in_weight += self.wts[e]
            self.inc[u] += 1
            self.inc[v] += 1
            if not self._union(u, v):
                return False
            for x in (u, v):
                root, cls = self.find(x)
                if self.inc[x] >= 3:
                    if not self._mark_dead(root, cls):
                        return False
                elif self.inc[x] == 2:
                    self.trail.append(("l", root, cls, len(self.deg2[root][cls])))
                    self.deg2[root][cls].append(x)
                    if self.dead[root][cls ^ 1] and self.und[x]:
                        for e2, _ in self.g.adjacency[x]:
                            if self.state[e2] == 0:
                                self.queue.append((e2, self.OUT))
        else:
            self.dirty = True
        for x in (u, v):
            if self.und[x] == 0:
                if self.inc[x] == 0:
                    return False  # isolated vertex
                if self.inc[x] == 1:
                    root, cls = self.find(x)
                    self.trail.append(("f", root, cls))
                    self.leaf_cnt[root][cls] += 1
                    if self.leaf_cnt[root][cls] >= 2:
                        if not self._mark_dead(root, cls):
                            return False
        return True

    def _bridge_pass(self) -> bool:
        # Bridges of the in-or-undecided graph must be in any spanning
        # tree; disconnection means no tree survives this branch.
        n = self.n
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for e in range(self.m):
            if self.state[e] != self.OUT:
                u, v = self.ends[e]
                adj[u].append((v, e))
                adj[v].append((u, e))
        disc = [-1] * n
        parent_of = [-1] * n
        pedge = [-1] * n
        timer = 0
        stack: list[tuple[int, int]] = [(0, 0)]
        disc[0] = 0
        timer = 1
        while stack:
            x, it = stack.pop()
            while it < len(adj[x]):
                y, e = adj[x][it]
                it += 1
                if disc[y] == -1:
                    disc[y] = timer
                    timer += 1
                    parent_of[y] = x
                    pedge[y] = e
                    stack.append((x, it))
                    stack.append((y, 0))
                    break
        if timer != n:
            return False
        low = disc[:]
        for v in sorted(range(n), key=lambda v: -disc[v]):
            for y, e in adj[v]:
                if e == pedge[v] or (e == pedge[y] and parent_of[y] == v):
                    continue
                if disc[y] < low[v]:
                    low[v] = disc[y]
            p = parent_of[v]
            if p != -1:
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] > disc[p] and self.state[pedge[v]] == 0:
                    self.queue.append((pedge[v], self.IN))
        return True

    def _propagate(self) -> bool:
        while True:
            while self.queue:
                e, val = self.queue.popleft()
                if not self._decide(e, val):
                    return False
            # Undecided edges inside one component would close a cycle.
            swept = False
            for e in range(self.m):
                if self.state[e] == 0:
                    u, v = self.ends[e]
                    if self.find(u)[0] == self.find(v)[0]:
                        self.queue.append((e, self.OUT))
                        swept = True
            if swept:
                continue
            if self.dirty:
                self.dirty = False
                if not self._bridge_pass():
                    return False
                if self.queue:
                    continue
            return True

    def _undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            entry = self.trail.pop()
            tag = entry[0]
            if tag == "s":
                e = entry[1]
                u, v = self.ends[e]
                if self.state[e] == self.IN:
                    self.in_count -= 1
                    self.in_weight -= self.wts[e]
                    self.inc[u] -= 1
                    self.inc[v] -= 1
                self.state[e] = 0
                self.und[u] += 1
                self.und[v] += 1
                self.und_total += 1
            elif tag == "u":
                _, ru, rv, d0, d1, f0, f1, l0, l1 = entry
                self.parent[rv] = rv
                self.size[ru] -= self.size[rv]
                self.dead[ru][0] = d0
                self.dead[ru][1] = d1
                self.leaf_cnt[ru][0] = f0
                self.leaf_cnt[ru][1] = f1
                del self.deg2[ru][0][l0:]
                del self.deg2[ru][1][l1:]
                self.comp_count += 1
            elif tag == "k":
                self.dead[entry[1]][entry[2]] = False
            elif tag == "f":
                self.leaf_cnt[entry[1]][entry[2]] -= 1
            else:  # "l"
                del self.deg2[entry[1]][entry[2]][entry[3]:]

    def _pick(self) -> int:
        best, score = -1, -1
        for e in range(self.m):
            if self.state[e] == 0:
                u, v = self.ends[e]
                s = self.inc[u] + self.inc[v]
                if s > score:
                    best, score = e, s
        return best

    def _complete(self) -> bool:
        if self.in_count != self.n - 1 or self.comp_count != 1:
            return False
        root, _ = self.find(0)
        ok = any(
            not self.dead[root][c] and self.leaf_cnt[root][c] == 1 for c in (0, 1)
        )
        if not ok:
            return False
        w = self.in_weight
        if self.best_weight is None or w < self.best_weight:
            self.best_weight = w
            self.best_tree = frozenset(e for e in range(self.m) if self.state[e] == self.IN)
        return True

    def _rec(self) -> bool:
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise TruncatedError(f"search exceeded {self.node_cap} nodes")
        if self.find_min and self.nonneg and self.best_weight is not None:
            if self.in_weight >= self.best_weight:
                return False
        e = self._pick()
        if e == -1:
            return self._complete()
        found = False
        for val in (self.IN, self.OUT):
            mark = len(self.trail)
            self.queue.clear()
            self.queue.append((e, val))
            if self._propagate():
                if self._rec():
                    found = True
            self._undo(mark)
            self.dirty = True
            if found and not self.find_min:
                return True
        return found

    def run(self, find_min: bool) -> tuple[EdgeSet, int] | None:
        self.find_min = find_min
        if len(connected_components(self.g)) != 1:
            return None
        mark = len(self.trail)
        self.queue.clear()
        if not self._propagate():
            self._undo(mark)
            return None
        self._rec()
        self._undo(mark)
        if self.best_tree is None:
            return None
        return self.best_tree, self.best_weight


def sb_tree_search(
    g: WeightedGraph, *, find_min: bool = True, node_cap: int = DEFAULT_NODE_CAP
) -> tuple[EdgeSet, int] | None:
    """Pruned search for a (minimum-weight) strongly balanced spanning
    tree.  With find_min=False it stops at the first tree found."""
    return _SbSearch(g, node_cap).run(find_min)


def brute_force_min_sbst(
    g: WeightedGraph, cap: int = DEFAULT_TREE_CAP
) -> tuple[EdgeSet, int] | None:
    """Minimum-weight strongly balanced spanning tree, or None.

    Plain enumeration does the work; graphs of maximum degree three go
    through the pruned search instead, which reaches sizes where plain
    enumeration would be hopeless.
    """
    if len(connected_components(g)) != 1:
        return None
    if max((g.degree(v) for v in range(g.vertex_count)), default=0) <= 3:
        return sb_tree_search(g, find_min=True)
    n = g.vertex_count
    best: tuple[EdgeSet, int] | None = None

    def look(tree: tuple[int, ...]) -> None:
        nonlocal best
        pairs = [(g.edges[i][0], g.edges[i][1]) for i in tree]
        if not _tree_is_strongly_balanced(n, pairs):
            return
        w = sum(g.edges[i][2] for i in tree)
        if best is None or w < best[1]:
            best = (frozenset(tree), w)

    enumerate_spanning_trees(g, look, cap)
    return best


def brute_force_sbst_exists(
    g: WeightedGraph, node_cap: int = DEFAULT_NODE_CAP
) -> EdgeSet | None:
    """Some strongly balanced spanning tree, or None.  First hit wins, so
    this is much faster than the minimizing variant on feasible inputs."""
    hit = sb_tree_search(g, find_min=False, node_cap=node_cap)
    return None if hit is None else hit[0]


# ---------------------------------------------------------------------------
# Augmentation oracle (branch and bound over candidate host edges)


_PAIRS: dict[int, list[tuple[int, int]]] = {}
_STATS: dict[tuple[int, int], tuple[int, int]] = {}


def _pairs(n: int) -> list[tuple[int, int]]:
    if n not in _PAIRS:
        _PAIRS[n] = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return _PAIRS[n]


def _graph_stats(n: int, mask: int) -> tuple[int, int]:
    """(deficiency, component count) of the graph on n vertices whose edge
    set is given as a bitmask over the lexicographic pair list."""
    key = (n, mask)
    hit = _STATS.get(key)
    if hit is not None:
        return hit
    pairs = _pairs(n)
    nbr = [0] * n
    rest = mask
    while rest:
        low = rest & -rest
        u, v = pairs[low.bit_length() - 1]
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
        rest ^= low
    seen = 0
    comps = 0
    for v in range(n):
        if not (seen >> v) & 1:
            comps += 1
            frontier = 1 << v
            while frontier:
                seen |= frontier
                nxt = 0
                f = frontier
                while f:
                    lb = f & -f
                    nxt |= nbr[lb.bit_length() - 1]
                    f ^= lb
                frontier = nxt & ~seen
    full = (1 << n) - 1
    dp = bytearray(1 << n)
    for s in range(1, 1 << n):
        lb = s & -s
        v = lb.bit_length() - 1
        rest = s ^ lb
        best = dp[rest]
        cand_bits = nbr[v] & rest
        while cand_bits:
            ub = cand_bits & -cand_bits
            u = ub.bit_length() - 1
            val = dp[rest ^ ub] + 1
            if val > best:
                best = val
            cand_bits ^= ub
        dp[s] = best
    result = (n - 2 * dp[full], comps)
    _STATS[key] = result
    return result


def brute_force_opt_aug(h: WeightedGraph, host: HostKind) -> int:
    """Minimum number of host edges whose addition makes h connected with
    a perfect matching, by exhaustive branch and bound.

    Admissible bound: at least components-1 edges are needed for
    connectivity and at least deficiency/2 for the matching, and one added
    edge improves each count by at most one.  Limited to 8 vertices.
    """
    n = h.vertex_count
    if n > 8:
        raise TooLargeError(f"{n} vertices is past the exhaustive limit of 8")
    if n % 2:
        raise OddVertexCountError(f"{n} vertices cannot be perfectly matched")
    host.validate_graph(h)
    pairs = _pairs(n)
    slot = {p: i for i, p in enumerate(pairs)}
    base = 0
    for u, v, _ in h.edges:
        base |= 1 << slot[(u, v)]
    cands = [slot[p] for p in pairs if not (base >> slot[p]) & 1 and host.admits_edge(*p)]
    best = n * n  # loose upper bound, beaten immediately

    def bound(mask: int) -> int:
        d, c = _graph_stats(n, mask)
        return max(c - 1, d // 2)

    def dfs(pos: int, added: int, mask: int) -> None:
        nonlocal best
        b = bound(mask)
        if added + b >= best:
            return
        if b == 0:
            best = added
            return
        for i in range(pos, len(cands)):
            dfs(i + 1, added + 1, mask | (1 << cands[i]))

    dfs(0, 0, base)
    return best


# ---------------------------------------------------------------------------
# Matching oracle


def max_matching_size_exhaustive(g: WeightedGraph) -> int:
    """Maximum matching size by subset DP; limited to 20 vertices."""
    n = g.vertex_count
    if n > 20:
        raise TooLargeError(f"{n} vertices is past the exhaustive limit of 20")
    nbr = [0] * n
    for u, v, _ in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    dp = bytearray(1 << n)
    for s in range(1, 1 << n):
        lb = s & -s
        v = lb.bit_length() - 1
        rest = s ^ lb
        best = dp[rest]
        cand = nbr[v] & rest
        while cand:
            ub = cand & -cand
            val = dp[rest ^ ub] + 1
            if val > best:
                best = val
            cand ^= ub
        dp[s] = best
    return dp[(1 << n) - 1]


# ---------------------------------------------------------------------------
# SAT oracle


def brute_force_sat(
    num_vars: int, clauses: Iterable[Sequence[int]]
) -> tuple[int, ...] | None:
    """Lexicographically smallest satisfying assignment (tuple of 0/1), or
    None.  Limited to 20 variables."""
    if num_vars > 20:
        raise TooLargeError(f"{num_vars} variables is past the exhaustive limit of 20")
    clause_list = [tuple(cl) for cl in clauses]
    for bits in range(1 << num_vars):
        # bits counts up with variable 1 as the most significant digit, so
        # the first hit is lexicographically smallest as a tuple.
        a = tuple((bits >> (num_vars - 1 - i)) & 1 for i in range(num_vars))
        if all(any((lit > 0) == bool(a[abs(lit) - 1]) for lit in cl) for cl in clause_list):
            return a
    return None
