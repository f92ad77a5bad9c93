"""Star graph data model.

A star graph is a finite graph, loops and multi-edges allowed, whose
vertices all have degree 4 or 6 and carry a cyclic numbering of their
half-edge slots (0..degree-1). The numbering induces adjacency and
oppositeness relations between slots at a vertex; those relations drive
everything downstream: transition systems, circuits, chord diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Mapping, NamedTuple

ALLOWED_DEGREES = (4, 6)


class AngleRelation(Enum):
    """Circular relation between two distinct slots of one vertex."""

    ADJACENT = "adjacent"
    OPPOSITE = "opposite"
    NEITHER = "neither"


def slot_relation(degree: int, slot_a: int, slot_b: int) -> AngleRelation:
    """Classify the relation between two slots around a vertex.

    Args:
        degree: vertex degree, 4 or 6.
        slot_a: first slot index, in 0..degree-1.
        slot_b: second slot index, different from slot_a.

    Returns:
        ADJACENT for circular distance 1, OPPOSITE for distance degree/2,
        NEITHER otherwise (possible only at degree 6, distance 2).
    """
    if degree not in ALLOWED_DEGREES:
        raise ValueError(f"degree must be one of {ALLOWED_DEGREES}, got {degree}")
    for slot in (slot_a, slot_b):
        if not 0 <= slot < degree:
            raise ValueError(f"slot {slot} out of range for degree {degree}")
    if slot_a == slot_b:
        raise ValueError("slots must be distinct")
    dist = min((slot_a - slot_b) % degree, (slot_b - slot_a) % degree)
    if dist == 1:
        return AngleRelation.ADJACENT
    if dist == degree // 2:
        return AngleRelation.OPPOSITE
    return AngleRelation.NEITHER


class HalfEdge(NamedTuple):
    """One half-edge: the slot `slot` at vertex `vertex`."""

    vertex: Hashable
    slot: int


EdgeInput = tuple[tuple[Hashable, int], tuple[Hashable, int]]


@dataclass(frozen=True)
class StarGraph:
    """A star graph with an ordered vertex list and canonical edge list.

    The order of `vertex_degrees` is the canonical vertex order; every
    deterministic tie-break downstream (circuit merge choices, partition
    enumeration) uses it. Edges are stored with each endpoint pair and
    the whole list sorted by (vertex order, slot).
    """

    vertex_degrees: tuple[tuple[Hashable, int], ...]
    edges: tuple[tuple[HalfEdge, HalfEdge], ...]

    def __post_init__(self) -> None:
        vd = tuple((v, int(d)) for v, d in self.vertex_degrees)
        index = {v: i for i, (v, _) in enumerate(vd)}

        def key(h: HalfEdge) -> tuple[int, int]:
            # unknown vertices sort last; validate() reports them
            return (index.get(h.vertex, len(index)), h.slot)

        edges = []
        for a, b in self.edges:
            ha, hb = HalfEdge(*a), HalfEdge(*b)
            edges.append((ha, hb) if key(ha) <= key(hb) else (hb, ha))
        edges.sort(key=lambda e: (key(e[0]), key(e[1])))
        object.__setattr__(self, "vertex_degrees", vd)
        object.__setattr__(self, "edges", tuple(edges))

    @classmethod
    def build(
        cls,
        degrees: Mapping[Hashable, int] | Iterable[tuple[Hashable, int]],
        edges: Iterable[EdgeInput],
    ) -> "StarGraph":
        """Construct from a vertex->degree mapping and edge endpoint pairs."""
        if isinstance(degrees, Mapping):
            vd = tuple(degrees.items())
        else:
            vd = tuple(degrees)
        return cls(vd, tuple(edges))  # type: ignore[arg-type]

    @cached_property
    def _vertex_index(self) -> dict[Hashable, int]:
        return {v: i for i, (v, _) in enumerate(self.vertex_degrees)}

    @cached_property
    def _degree(self) -> dict[Hashable, int]:
        return dict(self.vertex_degrees)

    @property
    def vertices(self) -> tuple[Hashable, ...]:
        return tuple(v for v, _ in self.vertex_degrees)

    def degree_of(self, vertex: Hashable) -> int:
        return self._degree[vertex]

    def vertex_index(self, vertex: Hashable) -> int:
        return self._vertex_index[vertex]

    def half_edges(self) -> Iterator[HalfEdge]:
        """All half-edges in canonical (vertex order, slot) order."""
        for v, d in self.vertex_degrees:
            for s in range(d):
                yield HalfEdge(v, s)

    @cached_property
    def edge_partner_map(self) -> dict[HalfEdge, HalfEdge]:
        """The pairing of half-edges induced by the edge list."""
        partner: dict[HalfEdge, HalfEdge] = {}
        for a, b in self.edges:
            partner[a] = b
            partner[b] = a
        return partner

    def validate(self) -> list[str]:
        """Return every violated structural invariant, empty when well-formed."""
        problems: list[str] = []
        seen_vertices: set[Hashable] = set()
        for v, d in self.vertex_degrees:
            if v in seen_vertices:
                problems.append(f"vertex {v!r} declared more than once")
            seen_vertices.add(v)
            if d not in ALLOWED_DEGREES:
                problems.append(f"vertex {v!r} has degree {d}, must be 4 or 6")

        use_count: dict[HalfEdge, int] = {}
        for a, b in self.edges:
            if a == b:
                problems.append(f"edge joins half-edge {a} to itself")
            for h in (a, b):
                if h.vertex not in self._degree:
                    problems.append(f"edge endpoint {h} references unknown vertex")
                elif not 0 <= h.slot < self._degree[h.vertex]:
                    problems.append(f"edge endpoint {h} has slot out of range")
                use_count[h] = use_count.get(h, 0) + 1

        for h, n in sorted(use_count.items(), key=lambda kv: str(kv[0])):
            if n > 1:
                problems.append(f"half-edge {h} used by {n} edges, expected 1")
        for v, d in self.vertex_degrees:
            if d not in ALLOWED_DEGREES:
                continue
            for s in range(d):
                if HalfEdge(v, s) not in use_count:
                    problems.append(f"half-edge {HalfEdge(v, s)} not used by any edge")
        return problems

    def is_connected(self) -> bool:
        """True when every vertex is reachable through edges (empty graph counts)."""
        if not self.vertex_degrees:
            return True
        adjacency: dict[Hashable, set[Hashable]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            if a.vertex in adjacency and b.vertex in adjacency:
                adjacency[a.vertex].add(b.vertex)
                adjacency[b.vertex].add(a.vertex)
        start = self.vertex_degrees[0][0]
        seen = {start}
        stack = [start]
        while stack:
            for w in adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertex_degrees)

    def reverse_vertex_rotation(self, vertex: Hashable) -> "StarGraph":
        """Reverse the cyclic slot order at one vertex (slot s becomes d-1-s)."""
        d = self._degree[vertex]

        def flip(h: HalfEdge) -> HalfEdge:
            if h.vertex == vertex:
                return HalfEdge(h.vertex, d - 1 - h.slot)
            return h

        return StarGraph(
            self.vertex_degrees,
            tuple((flip(a), flip(b)) for a, b in self.edges),
        )
