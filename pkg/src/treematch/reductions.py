"""Hardness reductions and their certificate maps.

Two constructions, each with a forward map (build the gadget graph) and a
certificate map in both directions where meaningful:

* Hamiltonian cycle on a cubic bipartite graph, to minimum tree-with-
  matching over a two-valued host.  Every source vertex becomes a hub
  with three ports; each source edge becomes two weight-1 "derived" edges
  wired by the rotation system so that consecutive cycle edges admit
  vertex-disjoint derived picks.  A Hamiltonian cycle then maps to a
  spanning tree of weight exactly |V(source)|, and no tree-with-matching
  can be lighter.

* 3-SAT to strongly balanced spanning tree existence on a subcubic
  graph.  Each variable becomes a cycle threaded on a spine, each clause
  a hexagon hooked onto the literal occurrences it mentions, and a start
  gadget pins down which side of any spanning tree's 2-coloring must
  carry the single leaf.  Satisfying assignments correspond to strongly
  balanced spanning trees.  (Strong balance constrains the tree's own
  bipartition; the host graph here is not bipartite.)

Vertices of the produced graphs carry string tags (``tags[v]``) so tests,
DOT export, and the certificate maps can name them; tag grammar is
documented on each reduction class.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    BadLayoutError,
    BadRotationError,
    DisconnectedError,
    GraphFormatError,
    MalformedTreeError,
    NotATreeError,
    NotCubicError,
    NotHamiltonianError,
    NotSatisfyingError,
    NotStronglyBalancedError,
)
from .graph import (
    EdgeSet,
    VertexCycle,
    WeightedGraph,
    as_bipartitioned_tree,
    bipartition_of,
    connected_components,
    is_hamiltonian_cycle,
)
from .matching import Matching
from .pmst import build_tree_containing_matching
from .sbst import is_strongly_balanced

# ---------------------------------------------------------------------------
# Rotation systems


@dataclass(frozen=True)
class RotationSystem:
    """A cyclic order of the incident edges around every vertex.

    ``order[v]`` lists edge indices; the cycle wraps.  Slots are 1-based
    in the API to match the file format.
    """

    graph: WeightedGraph
    order: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.order) != self.graph.vertex_count:
            raise BadRotationError(
                f"{len(self.order)} rotation lines for {self.graph.vertex_count} vertices"
            )
        for v, around in enumerate(self.order):
            incident = sorted(e for e, _ in self.graph.adjacency[v])
            if sorted(around) != incident:
                raise BadRotationError(
                    f"rotation at vertex {v} is not a permutation of its incident edges"
                )

    def slot(self, v: int, edge: int) -> int:
        """1-based position of an edge in v's rotation."""
        try:
            return self.order[v].index(edge) + 1
        except ValueError:
            raise BadRotationError(f"edge {edge} is not incident to vertex {v}") from None


def parse_rotation(text: str, graph: WeightedGraph) -> RotationSystem:
    """Rotation file: one ``r <vertex> <edge>...`` line per vertex, with
    ``c`` comment lines; edge numbers refer to the graph file's e-line
    order (0-based)."""
    rows: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] != "r":
            raise GraphFormatError(f"expected an r line, got {parts[0]!r}", lineno)
        try:
            v = int(parts[1])
            edges = tuple(int(p) for p in parts[2:])
        except (ValueError, IndexError):
            raise GraphFormatError("malformed r line", lineno) from None
        if v in rows:
            raise BadRotationError(f"line {lineno}: duplicate rotation for vertex {v}")
        rows[v] = edges
    missing = [v for v in range(graph.vertex_count) if v not in rows]
    if missing:
        raise BadRotationError(f"no rotation for vertices {missing}")
    extra = [v for v in rows if not 0 <= v < graph.vertex_count]
    if extra:
        raise BadRotationError(f"rotation for unknown vertices {sorted(extra)}")
    return RotationSystem(graph, tuple(rows[v] for v in range(graph.vertex_count)))


def format_rotation(rot: RotationSystem) -> str:
    lines = [
        "r {} {}".format(v, " ".join(str(e) for e in around))
        for v, around in enumerate(rot.order)
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Hamiltonian cycle -> minimum tree-with-matching


def _nxt(i: int) -> int:
    return i % 3 + 1


def _prv(i: int) -> int:
    return (i + 1) % 3 + 1


@dataclass(frozen=True)
class HcReduction:
    """Output of ``reduce_hc_to_minpmst``.

    Vertex ids: hub of source vertex u is 4u, its ports are 4u+1..4u+3
    (port i pairs with rotation slot i).  Tags: ``hub{u}``, ``port{u}.{i}``.
    Edge layout: 3n weight-0 hub-port edges first (vertex order, then port
    order), then two weight-1 derived edges per source edge in source
    edge order; ``edge_origin[e]`` names the source edge of a derived
    edge, None elsewhere.  ``complete_with_weight_two`` appends weight-2
    filler edges after everything else.

    A tree containing a perfect matching of weight exactly ``threshold``
    (= source vertex count) exists iff the source has a Hamiltonian
    cycle; anything heavier certifies nothing.
    """

    source: WeightedGraph
    rotation: RotationSystem
    graph: WeightedGraph
    tags: tuple[str, ...]
    edge_origin: tuple[int | None, ...]
    completed: bool = False

    @property
    def threshold(self) -> int:
        return self.source.vertex_count

    def hub(self, u: int) -> int:
        return 4 * u

    def port(self, u: int, i: int) -> int:
        assert 1 <= i <= 3
        return 4 * u + i

    def derived_pair(self, source_edge: int) -> tuple[int, int]:
        """The two derived edge indices of a source edge."""
        base = 3 * self.source.vertex_count + 2 * source_edge
        return base, base + 1


def reduce_hc_to_minpmst(g: WeightedGraph, rot: RotationSystem) -> HcReduction:
    """Build the hub-and-ports graph for a cubic bipartite connected
    source with the given rotation system.

    For a source edge in rotation slot i at u and slot j at v (u < v) the
    derived edges are {port(u, nxt i), port(v, prv j)} and
    {port(u, prv i), port(v, nxt j)}, where nxt/prv step the slot cycle.
    Each port therefore sees exactly one derived edge per slot it serves,
    which keeps the output cubic.
    """
    if rot.graph is not g:
        raise BadRotationError("rotation system belongs to a different graph")
    n = g.vertex_count
    if any(g.degree(v) != 3 for v in range(n)):
        bad = next(v for v in range(n) if g.degree(v) != 3)
        raise NotCubicError(f"vertex {bad} has degree {g.degree(bad)}")
    bipartition_of(g)
    if len(connected_components(g)) != 1:
        raise DisconnectedError("source graph is not connected")

    tags: list[str] = []
    for u in range(n):
        tags.append(f"hub{u}")
        tags.extend(f"port{u}.{i}" for i in (1, 2, 3))
    edges: list[tuple[int, int, int]] = []
    origin: list[int | None] = []
    for u in range(n):
        for i in (1, 2, 3):
            edges.append((4 * u, 4 * u + i, 0))
            origin.append(None)
    for e in range(g.edge_count):
        u, v = g.endpoints(e)
        i, j = rot.slot(u, e), rot.slot(v, e)
        edges.append((4 * u + _nxt(i), 4 * v + _prv(j), 1))
        edges.append((4 * u + _prv(i), 4 * v + _nxt(j), 1))
        origin.extend((e, e))
    out = WeightedGraph(4 * n, edges)
    return HcReduction(g, rot, out, tuple(tags), tuple(origin))


def complete_with_weight_two(red: HcReduction) -> HcReduction:
    """Fill in every absent vertex pair at weight 2 (turning the host
    complete); idempotent."""
    g = red.graph
    present = {(u, v) for u, v, _ in g.edges}
    filler = [
        (u, v, 2)
        for u in range(g.vertex_count)
        for v in range(u + 1, g.vertex_count)
        if (u, v) not in present
    ]
    if not filler:
        return red if red.completed else replace(red, completed=True)
    out = g.with_added_edges(filler)
    origin = red.edge_origin + (None,) * len(filler)
    return replace(red, graph=out, edge_origin=origin, completed=True)


def map_hc_to_tree(red: HcReduction, cycle: VertexCycle) -> EdgeSet:
    """Turn a Hamiltonian cycle of the source into a spanning tree of the
    reduced graph of weight exactly ``red.threshold``.

    One derived edge is chosen per cycle edge, consecutive choices vertex
    disjoint.  The first choice is forced: at the anchor (cycle[0],
    oriented so its two cycle edges sit in consecutive rotation slots) we
    take the derived edge through the port numbered like the incoming
    edge's slot, which no derived edge of the incoming edge can touch.
    Later choices prefer the lower edge index.  The chosen edges plus one
    hub-port edge per hub form a perfect matching; completing it greedily
    with weight-0 edges yields the tree.
    """
    src = red.source
    if not is_hamiltonian_cycle(src, cycle):
        raise NotHamiltonianError("not a Hamiltonian cycle of the source graph")
    n = src.vertex_count
    seq = list(cycle)

    def cycle_edges(s: list[int]) -> list[int]:
        return [src.edge_index(s[k], s[(k + 1) % n]) for k in range(n)]

    s0 = seq[0]
    a = red.rotation.slot(s0, src.edge_index(seq[-1], s0))
    b = red.rotation.slot(s0, src.edge_index(s0, seq[1]))
    if b != _nxt(a):
        seq = [s0] + seq[1:][::-1]
        a = red.rotation.slot(s0, src.edge_index(seq[-1], s0))
        b = red.rotation.slot(s0, src.edge_index(s0, seq[1]))
        assert b == _nxt(a), "two distinct slots must be consecutive one way around"

    edges_along = cycle_edges(seq)
    anchor_port = red.port(s0, a)
    first_pair = red.derived_pair(edges_along[0])
    chosen = [
        next(
            e
            for e in first_pair
            if anchor_port in red.graph.endpoints(e)
        )
    ]
    for k in range(1, n):
        prev_ends = set(red.graph.endpoints(chosen[-1]))
        options = [
            e
            for e in red.derived_pair(edges_along[k])
            if not prev_ends & set(red.graph.endpoints(e))
        ]
        assert options, "no derived edge disjoint from the previous choice"
        chosen.append(options[0])
    first_ends = set(red.graph.endpoints(chosen[0]))
    assert not first_ends & set(red.graph.endpoints(chosen[-1])), (
        "cycle closure reuses a port"
    )

    covered = set()
    for e in chosen:
        covered.update(red.graph.endpoints(e))
    matching_edges = set(chosen)
    for u in range(n):
        free = [i for i in (1, 2, 3) if red.port(u, i) not in covered]
        assert len(free) == 1, "each hub must have exactly one exposed port"
        matching_edges.add(red.graph.edge_index(red.hub(u), red.port(u, free[0])))
    matching = Matching.from_edges(red.graph, matching_edges)
    assert matching.is_perfect
    tree = build_tree_containing_matching(red.graph, matching)
    assert red.graph.total_weight(tree) == red.threshold
    return tree


# ---------------------------------------------------------------------------
# 3-SAT formulas with layouts


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF: clauses are triples of DIMACS literals (positive or negative
    1-based variable numbers; repeats within a clause are allowed)."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise BadLayoutError("formula needs at least one variable")
        for j, cl in enumerate(self.clauses):
            if len(cl) != 3:
                raise BadLayoutError(f"clause {j + 1} has {len(cl)} literals, want 3")
            for lit in cl:
                if lit == 0 or not 1 <= abs(lit) <= self.num_vars:
                    raise BadLayoutError(f"clause {j + 1} has bad literal {lit}")

    def satisfied_by(self, assignment: Sequence[int]) -> bool:
        return all(
            any((lit > 0) == bool(assignment[abs(lit) - 1]) for lit in cl)
            for cl in self.clauses
        )


Occurrence = tuple[int, int]  # (clause index, slot index), 0-based


@dataclass(frozen=True)
class CnfLayout:
    """A formula plus the bookkeeping the reduction needs: which side
    ("in" or "out") of its variables' cycles each clause hooks onto, and
    the ordered occurrence list of every variable on each side.

    The position of an occurrence in its list (1-based) decides which
    cycle vertex pair hosts it.
    """

    formula: CnfFormula
    clause_side: tuple[str, ...]
    in_occurrences: tuple[tuple[Occurrence, ...], ...]
    out_occurrences: tuple[tuple[Occurrence, ...], ...]

    def __post_init__(self) -> None:
        f = self.formula
        m = len(f.clauses)
        if len(self.clause_side) != m:
            raise BadLayoutError(f"{len(self.clause_side)} side entries for {m} clauses")
        if any(s not in ("in", "out") for s in self.clause_side):
            raise BadLayoutError("clause sides must be 'in' or 'out'")
        if len(self.in_occurrences) != f.num_vars or len(self.out_occurrences) != f.num_vars:
            raise BadLayoutError("need one occurrence list per variable and side")
        seen: set[Occurrence] = set()
        for var0 in range(f.num_vars):
            for side, lists in (("in", self.in_occurrences), ("out", self.out_occurrences)):
                for (j, l) in lists[var0]:
                    if not (0 <= j < m and 0 <= l < 3):
                        raise BadLayoutError(f"occurrence ({j}, {l}) is out of range")
                    if (j, l) in seen:
                        raise BadLayoutError(f"occurrence ({j}, {l}) listed twice")
                    seen.add((j, l))
                    if abs(f.clauses[j][l]) != var0 + 1:
                        raise BadLayoutError(
                            f"occurrence ({j}, {l}) is not about variable {var0 + 1}"
                        )
                    if self.clause_side[j] != side:
                        raise BadLayoutError(
                            f"occurrence ({j}, {l}) is on the wrong side for clause {j + 1}"
                        )
        expected = {(j, l) for j in range(m) for l in range(3)}
        if seen != expected:
            raise BadLayoutError(f"{len(expected - seen)} occurrences are unplaced")

    def occurrence_position(self, j: int, l: int) -> int:
        """1-based position of clause j's slot l in its variable's list."""
        var0 = abs(self.formula.clauses[j][l]) - 1
        lists = self.in_occurrences if self.clause_side[j] == "in" else self.out_occurrences
        return lists[var0].index((j, l)) + 1


def default_layout(formula: CnfFormula) -> CnfLayout:
    """Every clause on the "in" side, occurrences in clause-then-slot
    order."""
    m = len(formula.clauses)
    in_occ: list[list[Occurrence]] = [[] for _ in range(formula.num_vars)]
    for j in range(m):
        for l in range(3):
            in_occ[abs(formula.clauses[j][l]) - 1].append((j, l))
    return CnfLayout(
        formula,
        ("in",) * m,
        tuple(tuple(lst) for lst in in_occ),
        tuple(() for _ in range(formula.num_vars)),
    )


def parse_cnf_layout(text: str) -> CnfLayout:
    """DIMACS cnf with two extra line kinds: ``l <clause> <in|out>`` picks
    a clause's side and ``o <var> <in|out> <clause>:<slot>...`` orders a
    variable's occurrences (clause and slot 1-based in the file).  Absent
    l lines default to "in"; absent o lines default to clause-then-slot
    order among that variable's occurrences on that side."""
    num_vars = None
    num_clauses = None
    clauses: list[tuple[int, int, int]] = []
    sides: dict[int, str] = {}
    explicit_occ: dict[tuple[int, str], list[Occurrence]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if num_vars is not None:
                raise GraphFormatError("second p line", lineno)
            if len(parts) != 4 or parts[1] != "cnf":
                raise GraphFormatError("want: p cnf <vars> <clauses>", lineno)
            num_vars, num_clauses = int(parts[2]), int(parts[3])
        elif parts[0] == "l":
            if len(parts) != 3 or parts[2] not in ("in", "out"):
                raise GraphFormatError("want: l <clause> <in|out>", lineno)
            sides[int(parts[1]) - 1] = parts[2]
        elif parts[0] == "o":
            if len(parts) < 3 or parts[2] not in ("in", "out"):
                raise GraphFormatError("want: o <var> <in|out> <clause>:<slot>...", lineno)
            occ: list[Occurrence] = []
            for item in parts[3:]:
                try:
                    cs, ss = item.split(":")
                    occ.append((int(cs) - 1, int(ss) - 1))
                except ValueError:
                    raise GraphFormatError(f"bad occurrence {item!r}", lineno) from None
            explicit_occ[(int(parts[1]) - 1, parts[2])] = occ
        else:
            if num_vars is None:
                raise GraphFormatError("clause before the p line", lineno)
            try:
                lits = [int(p) for p in parts]
            except ValueError:
                raise GraphFormatError("malformed clause line", lineno) from None
            if not lits or lits[-1] != 0:
                raise GraphFormatError("clause line must end with 0", lineno)
            body = lits[:-1]
            if len(body) != 3:
                raise GraphFormatError(f"{len(body)} literals in a clause, want 3", lineno)
            clauses.append((body[0], body[1], body[2]))
    if num_vars is None:
        raise GraphFormatError("missing p line", 1)
    if num_clauses != len(clauses):
        raise GraphFormatError(
            f"p line promised {num_clauses} clauses, found {len(clauses)}", 1
        )
    formula = CnfFormula(num_vars, tuple(clauses))
    if any(j not in range(len(clauses)) for j in sides):
        raise BadLayoutError(f"side line for unknown clause {max(sides) + 1}")
    side_list = tuple(sides.get(j, "in") for j in range(len(clauses)))
    in_occ: list[list[Occurrence]] = [[] for _ in range(num_vars)]
    out_occ: list[list[Occurrence]] = [[] for _ in range(num_vars)]
    for j, cl in enumerate(clauses):
        for l, lit in enumerate(cl):
            (in_occ if side_list[j] == "in" else out_occ)[abs(lit) - 1].append((j, l))
    for (var0, side), occ in explicit_occ.items():
        if not 0 <= var0 < num_vars:
            raise BadLayoutError(f"occurrence line for unknown variable {var0 + 1}")
        target = in_occ if side == "in" else out_occ
        if sorted(occ) != sorted(target[var0]):
            raise BadLayoutError(
                f"occurrence list for variable {var0 + 1} ({side}) does not match the clauses"
            )
        target[var0] = occ
    return CnfLayout(
        formula,
        side_list,
        tuple(tuple(lst) for lst in in_occ),
        tuple(tuple(lst) for lst in out_occ),
    )


def format_cnf_layout(layout: CnfLayout) -> str:
    f = layout.formula
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    for cl in f.clauses:
        lines.append("{} {} {} 0".format(*cl))
    for j, side in enumerate(layout.clause_side):
        lines.append(f"l {j + 1} {side}")
    for var0 in range(f.num_vars):
        for side, lists in (("in", layout.in_occurrences), ("out", layout.out_occurrences)):
            occ = lists[var0]
            if occ:
                body = " ".join(f"{j + 1}:{l + 1}" for j, l in occ)
                lines.append(f"o {var0 + 1} {side} {body}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# 3-SAT -> strongly balanced spanning tree


_START_TAGS = ("start.s1", "start.p0", "start.p1", "start.p2",
               "start.q1", "start.s2", "start.q2", "start.s3")
_MID_NAMES = ("mid12", "mid23", "mid31")


@dataclass(frozen=True)
class SatReduction:
    """Output of ``reduce_sat_to_sbst``.

    Tag grammar (variables and clauses 1-based):
      start.s1 .. start.s3                  start gadget
      x{i}                                  variable cycle anchor
      x{i}.in0, x{i}.out0                   cycle ends next to the anchor
      x{i}.in{k}.pos / x{i}.in{k}.neg       k-th "in"-side occurrence pair
      x{i}.out{k}.pos / x{i}.out{k}.neg     same for the "out" side
      x{i}.true, x{i}.false                 polarity pair across the cycle
      x{i}.hub, x{i}.stem, x{i}.tip         pendant chain off the cycle
      x{i}.end                              spine vertex after the cycle
      joint{i}                              spine joint (last one pendant)
      c{j}.lit{1..3}, c{j}.mid12|mid23|mid31  clause hexagon
      c{j}.stem, c{j}.tip                   clause pendant chain

    The graph is connected, subcubic, of even order, with 10n + 14m + 8
    vertices and 13n + 17m + 7 edges; it has a strongly balanced spanning
    tree iff the formula is satisfiable.
    """

    layout: CnfLayout
    graph: WeightedGraph
    tags: tuple[str, ...]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {t: v for v, t in enumerate(self.tags)}

    def vertex(self, tag: str) -> int:
        try:
            return self._index[tag]
        except KeyError:
            raise KeyError(f"no vertex tagged {tag!r}") from None

    def edge_between(self, tag1: str, tag2: str) -> int:
        return self.graph.edge_index(self.vertex(tag1), self.vertex(tag2))


def reduce_sat_to_sbst(layout: CnfLayout) -> SatReduction:
    f = layout.formula
    n, m = f.num_vars, len(f.clauses)
    tags: list[str] = []

    def add(tag: str) -> None:
        tags.append(tag)

    for t in _START_TAGS:
        add(t)
    for i in range(1, n + 1):
        k_in = len(layout.in_occurrences[i - 1])
        k_out = len(layout.out_occurrences[i - 1])
        add(f"x{i}")
        add(f"x{i}.in0")
        for k in range(1, k_in + 1):
            add(f"x{i}.in{k}.pos")
            add(f"x{i}.in{k}.neg")
        add(f"x{i}.true")
        add(f"x{i}.false")
        for k in range(k_out, 0, -1):
            add(f"x{i}.out{k}.pos")
            add(f"x{i}.out{k}.neg")
        add(f"x{i}.out0")
        add(f"x{i}.hub")
        add(f"x{i}.stem")
        add(f"x{i}.tip")
        add(f"x{i}.end")
        add(f"joint{i}")
    for j in range(1, m + 1):
        add(f"c{j}.lit1")
        add(f"c{j}.mid12")
        add(f"c{j}.lit2")
        add(f"c{j}.mid23")
        add(f"c{j}.lit3")
        add(f"c{j}.mid31")
        add(f"c{j}.stem")
        add(f"c{j}.tip")

    index = {t: v for v, t in enumerate(tags)}
    pairs: list[tuple[str, str]] = []

    def connect(t1: str, t2: str) -> None:
        pairs.append((t1, t2))

    # Start gadget; the external edge pins variable 1's cycle to it.
    connect("start.s1", "start.p0")
    connect("start.p0", "start.p1")
    connect("start.p1", "start.p2")
    connect("start.p2", "start.q1")
    connect("start.q1", "start.s2")
    connect("start.p2", "start.q2")
    connect("start.q2", "start.s3")
    connect("start.p0", "x1")

    for i in range(1, n + 1):
        k_in = len(layout.in_occurrences[i - 1])
        k_out = len(layout.out_occurrences[i - 1])
        ring = [f"x{i}", f"x{i}.in0"]
        for k in range(1, k_in + 1):
            ring.append(f"x{i}.in{k}.pos")
            ring.append(f"x{i}.in{k}.neg")
        ring.append(f"x{i}.true")
        ring.append(f"x{i}.false")
        for k in range(k_out, 0, -1):
            ring.append(f"x{i}.out{k}.pos")
            ring.append(f"x{i}.out{k}.neg")
        ring.append(f"x{i}.out0")
        for idx in range(len(ring)):
            connect(ring[idx], ring[(idx + 1) % len(ring)])
        connect(f"x{i}.hub", f"x{i}.in0")
        connect(f"x{i}.hub", f"x{i}.out0")
        connect(f"x{i}.hub", f"x{i}.stem")
        connect(f"x{i}.stem", f"x{i}.tip")
        connect(f"x{i}.end", f"x{i}.true")
        connect(f"x{i}.end", f"x{i}.false")
        connect(f"x{i}.end", f"joint{i}")
        if i < n:
            connect(f"joint{i}", f"x{i + 1}")

    for j in range(1, m + 1):
        hexagon = [f"c{j}.lit1", f"c{j}.mid12", f"c{j}.lit2",
                   f"c{j}.mid23", f"c{j}.lit3", f"c{j}.mid31"]
        for idx in range(6):
            connect(hexagon[idx], hexagon[(idx + 1) % 6])
        connect(f"c{j}.stem", f"c{j}.mid31")
        connect(f"c{j}.stem", f"c{j}.tip")
        for l in range(3):
            lit = f.clauses[j - 1][l]
            side = layout.clause_side[j - 1]
            k = layout.occurrence_position(j - 1, l)
            polarity = "pos" if lit > 0 else "neg"
            connect(f"c{j}.lit{l + 1}", f"x{abs(lit)}.{side}{k}.{polarity}")

    edges = [(index[t1], index[t2], 0) for t1, t2 in pairs]
    graph = WeightedGraph(len(tags), edges)
    return SatReduction(layout, graph, tuple(tags))


def map_assignment_to_sb_tree(red: SatReduction, assignment: Sequence[int]) -> EdgeSet:
    """Spanning tree for a satisfying assignment.

    Exactly one independent cycle is broken per drop: the variable cycle
    at the anchor, the hub detour, and the polarity triangle (three drops
    per variable, steered by its value), then per clause the hexagon edge
    after its first satisfied slot plus the two unused attachments.
    """
    f = red.layout.formula
    if len(assignment) != f.num_vars or any(a not in (0, 1) for a in assignment):
        raise ValueError("assignment must be one 0/1 value per variable")
    if not f.satisfied_by(assignment):
        raise NotSatisfyingError("assignment does not satisfy the formula")

    drops: set[int] = set()
    for i in range(1, f.num_vars + 1):
        if assignment[i - 1]:
            drops.add(red.edge_between(f"x{i}", f"x{i}.in0"))
            drops.add(red.edge_between(f"x{i}.hub", f"x{i}.out0"))
            drops.add(red.edge_between(f"x{i}.false", f"x{i}.end"))
        else:
            drops.add(red.edge_between(f"x{i}", f"x{i}.out0"))
            drops.add(red.edge_between(f"x{i}.hub", f"x{i}.in0"))
            drops.add(red.edge_between(f"x{i}.true", f"x{i}.end"))
    for j in range(1, len(f.clauses) + 1):
        sat_slot = next(
            l
            for l in range(3)
            if (f.clauses[j - 1][l] > 0) == bool(assignment[abs(f.clauses[j - 1][l]) - 1])
        )
        for l in range(3):
            lit = f.clauses[j - 1][l]
            side = red.layout.clause_side[j - 1]
            k = red.layout.occurrence_position(j - 1, l)
            polarity = "pos" if lit > 0 else "neg"
            if l != sat_slot:
                drops.add(
                    red.edge_between(f"c{j}.lit{l + 1}", f"x{abs(lit)}.{side}{k}.{polarity}")
                )
        drops.add(red.edge_between(f"c{j}.lit{sat_slot + 1}", f"c{j}.{_MID_NAMES[sat_slot]}"))

    tree = frozenset(e for e in range(red.graph.edge_count) if e not in drops)
    assert len(tree) == red.graph.vertex_count - 1
    return tree


def extract_assignment_from_tree(red: SatReduction, tree: Iterable[int]) -> tuple[int, ...]:
    """Read the assignment off a strongly balanced spanning tree: variable
    i is true iff the tree keeps the anchor's edge toward out0."""
    try:
        t = as_bipartitioned_tree(red.graph, tree)
    except NotATreeError as exc:
        raise MalformedTreeError(str(exc)) from None
    if is_strongly_balanced(t) is None:
        raise NotStronglyBalancedError("tree is not strongly balanced")
    edge_set = t.edges
    f = red.layout.formula
    out: list[int] = []
    for i in range(1, f.num_vars + 1):
        has_in = red.edge_between(f"x{i}", f"x{i}.in0") in edge_set
        has_out = red.edge_between(f"x{i}", f"x{i}.out0") in edge_set
        if has_in == has_out:
            raise MalformedTreeError(
                f"anchor of variable {i} keeps {'both' if has_in else 'neither'} cycle edges"
            )
        out.append(1 if has_out else 0)
    assignment = tuple(out)
    if not f.satisfied_by(assignment):
        raise MalformedTreeError("decoded assignment does not satisfy the formula")
    return assignment


# ---------------------------------------------------------------------------
# Leaf replacement


def replace_leaves(g: WeightedGraph) -> WeightedGraph:
    """Hang a 4-cycle off every degree-1 vertex (via a fresh pendant
    edge), eliminating leaves while preserving bipartiteness, parity of
    the order, and maximum degree 3 or more.

    A graph without leaves comes back unchanged in value.
    """
    leaves = [v for v in range(g.vertex_count) if g.degree(v) == 1]
    if not leaves:
        return g
    edges = list(g.edges)
    base = g.vertex_count
    for t, leaf in enumerate(leaves):
        a, b, c, d = (base + 4 * t + o for o in range(4))
        edges.extend([(leaf, a, 0), (a, b, 0), (b, c, 0), (c, d, 0), (a, d, 0)])
    return WeightedGraph(base + 4 * len(leaves), edges)
