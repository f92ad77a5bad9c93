"""Independent surface oracle: trace cells directly and classify the surface.

Fixing, at every vertex, which alternating angle class is black turns a
star graph into a two-cell-family (checkerboard) complex: black cells
are traced by crossing black angles, white cells by crossing white
angles. Counting cells gives the Euler characteristic; checking whether
all cells can be oriented so each edge is traversed once in each
direction decides orientability. This never touches the chord-diagram
route, so it cross-checks the rank-based solver end to end.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from .chords import ChordDiagram, surgery_circle_count
from .circuits import RotatingSplittingCircuit, VertexKind
from .genus import B, W, DerivedDiagrams, is_permissible
from .star_graph import HalfEdge, StarGraph

AngleColoring = Mapping[Hashable, int]


@dataclass(frozen=True)
class AtomSurface:
    """The closed surface one angle coloring embeds the graph into."""

    black_cells: int
    white_cells: int
    euler_characteristic: int
    orientable: bool

    @property
    def genus(self) -> int:
        if self.orientable:
            return (2 - self.euler_characteristic) // 2
        return 2 - self.euler_characteristic


def _normalize_coloring(graph: StarGraph, coloring) -> dict[Hashable, int]:
    if isinstance(coloring, Mapping):
        bits = {v: int(coloring[v]) & 1 for v in graph.vertices}
    else:
        values = list(coloring)
        if len(values) != len(graph.vertex_degrees):
            raise ValueError("coloring length does not match vertex count")
        bits = {v: int(x) & 1 for (v, _), x in zip(graph.vertex_degrees, values)}
    return bits


def _angle_partner(degree: int, slot: int, bit: int, want_black: bool) -> int:
    # angle i spans slots i and i+1 and is black exactly when i % 2 == bit
    here_black = (slot % 2) == bit
    if here_black == want_black:
        return (slot + 1) % degree
    return (slot - 1) % degree


def _trace_cells(
    graph: StarGraph, bits: dict[Hashable, int], want_black: bool
) -> tuple[list[tuple[HalfEdge, ...]], dict[HalfEdge, int], list[int]]:
    """Directed boundary cycles of one cell family.

    Returns the cycles, the cycle index of every half-edge, and for each
    undirected cell the index of its representative cycle (the one
    holding the least half-edge). Cells are cycle pairs: reversing a
    cycle yields its partner, never itself.
    """
    ep = graph.edge_partner_map
    vindex = graph.vertex_index

    def key(h: HalfEdge) -> tuple[int, int]:
        return (vindex(h.vertex), h.slot)

    cycles: list[tuple[HalfEdge, ...]] = []
    cycle_of: dict[HalfEdge, int] = {}
    for start in graph.half_edges():
        if start in cycle_of:
            continue
        cycle = []
        h = start
        while True:
            cycle.append(h)
            cycle_of[h] = len(cycles)
            d = graph.degree_of(h.vertex)
            t = _angle_partner(d, h.slot, bits[h.vertex], want_black)
            h = ep[HalfEdge(h.vertex, t)]
            if h == start:
                break
        cycles.append(tuple(cycle))

    pair_rep: list[int] = [-1] * len(cycles)
    for i, cycle in enumerate(cycles):
        if pair_rep[i] != -1:
            continue
        mate = cycle_of[ep[cycle[0]]]
        if mate == i:
            raise AssertionError("cell boundary cycle equals its own reversal")
        rep = i if key(min(cycle, key=key)) <= key(min(cycles[mate], key=key)) else mate
        pair_rep[i] = rep
        pair_rep[mate] = rep
    return cycles, cycle_of, pair_rep


def trace_atom(graph: StarGraph, coloring) -> AtomSurface:
    """Trace both cell families of one angle coloring and classify the surface.

    `coloring` maps each vertex to a bit choosing which angle parity
    class is black there (sequences are read in vertex order).
    """
    problems = graph.validate()
    if problems:
        raise ValueError("invalid graph: " + "; ".join(problems))
    if not graph.vertex_degrees:
        raise ValueError("cannot trace an empty graph")
    if not graph.is_connected():
        raise ValueError("cannot trace a disconnected graph")
    bits = _normalize_coloring(graph, coloring)

    _, black_cycle_of, black_rep = _trace_cells(graph, bits, want_black=True)
    _, white_cycle_of, white_rep = _trace_cells(graph, bits, want_black=False)
    black_count = len(set(black_rep))
    white_count = len(set(white_rep))

    vertices = len(graph.vertex_degrees)
    edge_count = len(graph.edges)
    euler = vertices - edge_count + black_count + white_count

    # orientability: pick a direction for every cell so that each edge is
    # traversed once in each direction by its black and its white cell;
    # that is a parity constraint between the two cells at every edge
    cell_ids: dict[tuple[str, int], int] = {}
    parent: list[int] = []
    parity: list[int] = []

    def cell_node(family: str, rep: int) -> int:
        node = cell_ids.get((family, rep))
        if node is None:
            node = len(parent)
            cell_ids[(family, rep)] = node
            parent.append(node)
            parity.append(0)
        return node

    def find(x: int) -> tuple[int, int]:
        acc = 0
        while parent[x] != x:
            acc ^= parity[x]
            x = parent[x]
        return x, acc

    def union(x: int, y: int, want: int) -> bool:
        rx, px = find(x)
        ry, py = find(y)
        if rx == ry:
            return (px ^ py) == want
        parent[rx] = ry
        parity[rx] = px ^ py ^ want
        return True

    orientable = True
    for a, b in graph.edges:
        bc = black_cycle_of[a]
        wc = white_cycle_of[a]
        b_forward = 0 if black_rep[bc] == bc else 1
        w_forward = 0 if white_rep[wc] == wc else 1
        nb = cell_node("b", black_rep[bc])
        nw = cell_node("w", white_rep[wc])
        if not union(nb, nw, 1 ^ b_forward ^ w_forward):
            orientable = False
            break

    return AtomSurface(black_count, white_count, euler, orientable)


def atom_spectrum(graph: StarGraph, max_vertices: int = 16) -> frozenset[tuple[int, bool]]:
    """All (genus, orientable) surfaces over every angle coloring of the graph.

    Exhaustive over 2^n colorings, so refuses graphs with more than
    `max_vertices` vertices.
    """
    n = len(graph.vertex_degrees)
    if n > max_vertices:
        raise ValueError(f"{n} vertices exceed the exhaustive limit of {max_vertices}")
    results = set()
    for mask in range(1 << n):
        bits = [(mask >> i) & 1 for i in range(n)]
        surface = trace_atom(graph, bits)
        results.add((surface.genus, surface.orientable))
    return frozenset(results)


def _passage_angle_parity(degree: int, arrival: int, departure: int) -> int:
    lo, hi = sorted((arrival, departure))
    if hi == lo + 1:
        return lo % 2
    if lo == 0 and hi == degree - 1:
        return hi % 2
    raise ValueError("passage does not cross a single angle")


def coloring_to_partition(
    derived: DerivedDiagrams, coloring
) -> tuple[str, ...]:
    """The side assignment an angle coloring induces on the expanded diagram.

    A vertex's chords land in the cell family opposite its passage
    angles: a chord goes to B exactly when the angle class its region
    belongs to is colored black. For splitting vertices the two chords
    sit in opposite classes and thus on opposite sides.
    """
    graph = derived.graph
    circuit = derived.circuit
    bits = _normalize_coloring(graph, coloring)
    sides: list[str] = [""] * len(derived.expanded.chords)
    for v, d in graph.vertex_degrees:
        chord_ids = [
            i for i, c in enumerate(derived.expanded.chords) if c.group[1] == v
        ]
        if circuit.vertex_kind(v) is VertexKind.ROTATING:
            position = circuit.positions_of(v)[0]
            visit = circuit.visits[position]
            klass = _passage_angle_parity(d, visit.arrival, visit.departure)
            side = B if (1 - klass) % 2 == bits[v] else W
            for i in chord_ids:
                sides[i] = side
        else:
            principal = next(
                p
                for p in circuit.positions_of(v)
                if _is_opposite_passage(circuit, p)
            )
            for i in chord_ids:
                chord = derived.expanded.chords[i]
                outer = next(p for p in chord.origins if p != principal)
                visit = circuit.visits[outer]
                klass = _passage_angle_parity(d, visit.arrival, visit.departure)
                sides[i] = B if (1 - klass) % 2 == bits[v] else W
    return tuple(sides)


def _is_opposite_passage(circuit: RotatingSplittingCircuit, position: int) -> bool:
    visit = circuit.visits[position]
    degree = circuit.graph.degree_of(visit.vertex)
    return (visit.arrival - visit.departure) % degree == degree // 2


def separation_surgery_check(
    dprime: ChordDiagram, sides: Sequence[str]
) -> tuple[int, int]:
    """Circle counts of the two side diagrams of a permissible partition.

    Each side keeps every circle point; chords of the other side are
    dropped, their points passing straight through.

    Raises:
        ValueError: if the partition breaks the group rules.
    """
    if not is_permissible(dprime, sides):
        raise ValueError("partition violates the group rules")
    w_chords = tuple(c for c, s in zip(dprime.chords, sides) if s == W)
    b_chords = tuple(c for c, s in zip(dprime.chords, sides) if s == B)
    circles_w = surgery_circle_count(ChordDiagram(dprime.point_count, w_chords))
    circles_b = surgery_circle_count(ChordDiagram(dprime.point_count, b_chords))
    return circles_w, circles_b
