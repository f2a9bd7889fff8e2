"""Planar bicolored graphs with boundary, and their matroidal readings.

A plabic graph is stored combinatorially: integer vertex ids (boundary
vertices are 1..n, internal vertices follow), an edge list, and a rotation
system giving the clockwise cyclic order of edges at each vertex.  Graphs
built from Le-diagrams also retain coordinates and per-edge geometric classes
(horizontal / vertical / diagonal / lollipop), which the canonical
orientation needs.

Conventions, fixed once and certified by the exhaustive agreement of trip
permutations with the pipe-dream permutations on small diagrams:

* each + cell contributes a black vertex toward the northeast (holding the
  north and east edges) and a white vertex toward the southwest (holding the
  west and south edges), joined by a diagonal edge;
* trips turn to the next edge clockwise at a black vertex and to the previous
  one at a white vertex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import networkx as nx

from .bijections import CCW, CW, DecoratedPermutation, LeDiagram, _border_labels, decorated_perm
from .errors import (
    BadEndpoints,
    NotPerfectlyOrientable,
    MissingGeometry,
    SizeMismatch,
    StuckTrip,
)
from .matroid import Matroid, make_matroid

BLACK = "b"
WHITE = "w"


@dataclass(frozen=True)
class PlabicGraph:
    n: int
    colors: tuple[tuple[int, str], ...]  # internal vertex id -> color
    edges: tuple[tuple[int, int], ...]
    rotations: tuple[tuple[int, tuple[int, ...]], ...]  # vertex -> clockwise edge ids
    edge_kind: tuple[tuple[int, str], ...] = ()  # edge id -> h|v|d|l, when built from a diagram
    positions: tuple[tuple[int, tuple[float, float]], ...] = ()

    def __post_init__(self):
        color = dict(self.colors)
        rot = dict(self.rotations)
        if any(c not in (BLACK, WHITE) for c in color.values()):
            raise SizeMismatch("internal colors must be 'b' or 'w'")
        incident: dict[int, list[int]] = {v: [] for v in self.vertex_ids()}
        for idx, (u, v) in enumerate(self.edges):
            incident[u].append(idx)
            incident[v].append(idx)
        for i in range(1, self.n + 1):
            if len(incident[i]) != 1:
                raise SizeMismatch(f"boundary vertex {i} has degree {len(incident[i])}")
        for v, order in rot.items():
            if sorted(order) != sorted(incident[v]):
                raise StuckTrip(f"rotation at {v} does not list its incident edges")
        for v, inc in incident.items():
            if v not in rot:
                raise StuckTrip(f"vertex {v} missing from the rotation system")

    def vertex_ids(self):
        return list(range(1, self.n + 1)) + [v for v, _ in self.colors]

    def color_of(self, v: int) -> str:
        return dict(self.colors)[v]

    def is_internal(self, v: int) -> bool:
        return v > self.n

    def incident(self, v: int) -> tuple[int, ...]:
        return dict(self.rotations)[v]

    def other_end(self, edge_id: int, v: int) -> int:
        u, w = self.edges[edge_id]
        return w if u == v else u

    def degree(self, v: int) -> int:
        return len(self.incident(v))


@dataclass(frozen=True)
class PerfectOrientation:
    """Direction per edge: black internal vertices have exactly one outgoing
    edge, white ones exactly one incoming."""

    graph: PlabicGraph
    directions: tuple[tuple[int, int], ...]  # (tail, head) per edge id

    def __post_init__(self):
        g = self.graph
        if len(self.directions) != len(g.edges):
            raise SizeMismatch("one direction per edge required")
        out: dict[int, int] = {}
        inc: dict[int, int] = {}
        for (tail, head), (u, v) in zip(self.directions, g.edges):
            if {tail, head} != {u, v}:
                raise SizeMismatch(f"direction ({tail},{head}) not on edge ({u},{v})")
            out[tail] = out.get(tail, 0) + 1
            inc[head] = inc.get(head, 0) + 1
        for v, c in g.colors:
            if c == BLACK and out.get(v, 0) != 1:
                raise SizeMismatch(f"black vertex {v} has {out.get(v, 0)} outgoing edges")
            if c == WHITE and inc.get(v, 0) != 1:
                raise SizeMismatch(f"white vertex {v} has {inc.get(v, 0)} incoming edges")

    @property
    def source_set(self) -> frozenset[int]:
        srcs = set()
        for (tail, head) in self.directions:
            if tail <= self.graph.n:
                srcs.add(tail)
        return frozenset(srcs)


# ---------------------------------------------------------------------------
# construction from a Le-diagram


def plabic_of_le(diag: LeDiagram) -> PlabicGraph:
    n = diag.n
    lam = diag.row_lengths()
    heights = diag.col_heights()
    vlabel, hlabel = _border_labels(diag)
    plus = sorted(diag.plus)

    colors: dict[int, str] = {}
    positions: dict[int, tuple[float, float]] = {}
    next_id = n + 1

    def new_vertex(color: str, pos: tuple[float, float]) -> int:
        nonlocal next_id
        v = next_id
        next_id += 1
        colors[v] = color
        positions[v] = pos
        return v

    black: dict[tuple[int, int], int] = {}
    white: dict[tuple[int, int], int] = {}
    for (i, j) in plus:
        black[(i, j)] = new_vertex(BLACK, (j + 0.2, i - 0.2))
        white[(i, j)] = new_vertex(WHITE, (j - 0.2, i + 0.2))

    # boundary vertex positions along the southeast border
    for i in range(1, diag.d + 1):
        positions[vlabel[i]] = (lam[i - 1] + 0.7, float(i))
    for c in range(1, n - diag.d + 1):
        positions[hlabel[c]] = (float(c), heights[c - 1] + 0.7)

    edges: list[tuple[int, int]] = []
    kinds: list[str] = []

    def add_edge(u: int, v: int, kind: str) -> None:
        edges.append((u, v))
        kinds.append(kind)

    for (i, j) in plus:
        add_edge(black[(i, j)], white[(i, j)], "d")
        # east hook: to the next + in the row, else to the row's boundary
        east = next(((i, c) for c in range(j + 1, lam[i - 1] + 1) if (i, c) in white), None)
        if east is not None:
            add_edge(black[(i, j)], white[east], "h")
        else:
            add_edge(black[(i, j)], vlabel[i], "h")
        # south hook
        south = next(((r, j) for r in range(i + 1, heights[j - 1] + 1) if (r, j) in black), None)
        if south is not None:
            add_edge(white[(i, j)], black[south], "v")
        else:
            add_edge(white[(i, j)], hlabel[j], "v")

    # lollipops at the fixed points
    plus_rows = {i for i, _ in plus}
    plus_cols = {j for _, j in plus}
    for i in range(1, diag.d + 1):
        if lam[i - 1] == 0 or i not in plus_rows:
            bx, by = positions[vlabel[i]]
            head = new_vertex(WHITE, (bx - 0.35, by))
            add_edge(vlabel[i], head, "l")
    for c in range(1, n - diag.d + 1):
        if heights[c - 1] == 0 or c not in plus_cols:
            bx, by = positions[hlabel[c]]
            head = new_vertex(BLACK, (bx, by - 0.35))
            add_edge(hlabel[c], head, "l")

    rotations = _rotations_from_positions(n, colors, edges, positions)
    return PlabicGraph(
        n,
        tuple(sorted(colors.items())),
        tuple(edges),
        tuple(sorted(rotations.items())),
        tuple(enumerate(kinds)),
        tuple(sorted(positions.items())),
    )


def _rotations_from_positions(n, colors, edges, positions):
    incident: dict[int, list[int]] = {v: [] for v in positions}
    for idx, (u, v) in enumerate(edges):
        incident[u].append(idx)
        incident[v].append(idx)

    def angle(v, idx):
        u, w = edges[idx]
        o = w if u == v else u
        x0, y0 = positions[v]
        x1, y1 = positions[o]
        # screen coordinates (y grows downward): increasing angle is clockwise
        return math.atan2(y1 - y0, x1 - x0)

    return {v: tuple(sorted(inc, key=lambda idx: angle(v, idx))) for v, inc in incident.items()}


# ---------------------------------------------------------------------------
# trips


def trip_perm(g: PlabicGraph) -> DecoratedPermutation:
    """Follow each boundary vertex's trip through the graph."""
    mapping: dict[int, int] = {}
    colors: dict[int, str] = {}
    for start in range(1, g.n + 1):
        edge = g.incident(start)[0]
        v = g.other_end(edge, start)
        if g.is_internal(v) and g.degree(v) == 1:
            # a lollipop: the trip bounces straight back
            mapping[start] = start
            colors[start] = CW if g.color_of(v) == BLACK else CCW
            continue
        steps = 0
        limit = 4 * len(g.edges) + 4
        while g.is_internal(v):
            order = g.incident(v)
            pos = order.index(edge)
            if g.color_of(v) == BLACK:
                edge = order[(pos + 1) % len(order)]
            else:
                edge = order[(pos - 1) % len(order)]
            v = g.other_end(edge, v)
            steps += 1
            if steps > limit:
                raise StuckTrip(f"trip from {start} does not terminate")
        if v == start:
            raise StuckTrip(f"self-trip through internal vertices at {start}")
        mapping[start] = v
    inv = {b: a for a, b in mapping.items()}
    # the trip permutation reads p(i) = endpoint of the trip starting at i
    return decorated_perm(tuple(mapping[i] for i in range(1, g.n + 1)), colors)


# ---------------------------------------------------------------------------
# orientations


def enumerate_perfect_orientations(g: PlabicGraph) -> list[PerfectOrientation]:
    """All orientations with the black/white degree constraints, by
    backtracking over the edge list."""
    m = len(g.edges)
    color = dict(g.colors)
    deg = {v: g.degree(v) for v in g.vertex_ids()}
    out_count = {v: 0 for v in g.vertex_ids()}
    in_count = {v: 0 for v in g.vertex_ids()}
    remaining = {v: deg[v] for v in g.vertex_ids()}
    chosen: list[tuple[int, int]] = []
    found: list[PerfectOrientation] = []

    def feasible(v: int) -> bool:
        c = color.get(v)
        if c == BLACK:
            if out_count[v] > 1:
                return False
            if remaining[v] == 0 and out_count[v] != 1:
                return False
            if out_count[v] + remaining[v] < 1:
                return False
        elif c == WHITE:
            if in_count[v] > 1:
                return False
            if remaining[v] == 0 and in_count[v] != 1:
                return False
            if in_count[v] + remaining[v] < 1:
                return False
        return True

    def place(idx: int) -> None:
        if idx == m:
            found.append(PerfectOrientation(g, tuple(chosen)))
            return
        u, v = g.edges[idx]
        for tail, head in ((u, v), (v, u)):
            out_count[tail] += 1
            in_count[head] += 1
            remaining[u] -= 1
            remaining[v] -= 1
            chosen.append((tail, head))
            if feasible(u) and feasible(v):
                place(idx + 1)
            chosen.pop()
            out_count[tail] -= 1
            in_count[head] -= 1
            remaining[u] += 1
            remaining[v] += 1

    place(0)
    return found


def canonical_orientation(g: PlabicGraph) -> PerfectOrientation:
    """Horizontal edges west, vertical edges south, diagonals southwest.

    Requires the geometric edge classes retained by plabic_of_le.
    """
    kind = dict(g.edge_kind)
    pos = dict(g.positions)
    if len(kind) != len(g.edges) or not pos:
        raise MissingGeometry("orientation needs the diagram geometry")
    color = dict(g.colors)
    directions = []
    for idx, (u, v) in enumerate(g.edges):
        k = kind[idx]
        if k == "h":  # toward smaller x
            tail, head = (u, v) if pos[u][0] > pos[v][0] else (v, u)
        elif k == "v":  # toward larger y (downward)
            tail, head = (u, v) if pos[u][1] < pos[v][1] else (v, u)
        elif k == "d":  # black to white
            tail, head = (u, v) if color.get(u) == BLACK else (v, u)
        elif k == "l":  # into a white head, out of a black head
            head_vertex = u if color.get(u) else v
            if color[head_vertex] == WHITE:
                tail, head = (g.other_end(idx, head_vertex), head_vertex)
            else:
                tail, head = (head_vertex, g.other_end(idx, head_vertex))
        else:
            raise MissingGeometry(f"unknown edge class {k!r}")
        directions.append((tail, head))
    return PerfectOrientation(g, tuple(directions))


# ---------------------------------------------------------------------------
# matroid readings


def matroid_of_plabic(g: PlabicGraph) -> Matroid:
    orientations = enumerate_perfect_orientations(g)
    if not orientations:
        raise NotPerfectlyOrientable("graph admits no perfect orientation")
    return make_matroid(g.n, {o.source_set for o in orientations})


def _oriented_digraph(o: PerfectOrientation) -> nx.DiGraph:
    dg = nx.DiGraph()
    dg.add_nodes_from(o.graph.vertex_ids())
    dg.add_edges_from(o.directions)
    return dg


def bases_via_flows(g: PlabicGraph, o: PerfectOrientation) -> frozenset[frozenset[int]]:
    """All d-subsets J reachable from the source set by a system of
    vertex-disjoint directed paths (computed as a unit-capacity max flow with
    split vertices)."""
    from itertools import combinations

    src = o.source_set
    d = len(src)
    base = nx.DiGraph()
    for v in g.vertex_ids():
        base.add_edge(("in", v), ("out", v), capacity=1)
    for tail, head in o.directions:
        base.add_edge(("out", tail), ("in", head), capacity=1)
    out = set()
    for j in combinations(range(1, g.n + 1), d):
        jset = frozenset(j)
        need = src - jset
        targets = jset - src
        if not need:
            out.add(jset)
            continue
        dg = base.copy()
        for i in need:
            dg.add_edge("S", ("in", i), capacity=1)
        for t in targets:
            dg.add_edge(("out", t), "T", capacity=1)
        value, _ = nx.maximum_flow(dg, "S", "T")
        if value == len(need):
            out.add(jset)
    return frozenset(out)


def exchange_via_path(g: PlabicGraph, o: PerfectOrientation, i: int, j: int) -> bool:
    """Does a directed path run from boundary vertex i (a source) to boundary
    vertex j (a sink)?  Equivalent to the exchanged set being a basis."""
    src = o.source_set
    if i not in src or j in src or not (1 <= j <= g.n):
        raise BadEndpoints(f"need a source i and a non-source boundary j, got ({i},{j})")
    dg = _oriented_digraph(o)
    return nx.has_path(dg, i, j)
