"""Transition systems and rotating-splitting circuits.

A transition system picks, at every vertex, a perfect matching of the
slots; each matched pair is a passage the traversal takes through the
vertex. Matchings whose pairs are all adjacent are rotating; degree-6
matchings with one opposite and two adjacent pairs are splitting. A
rotating-splitting circuit is a transition system using only those two
kinds whose induced closed walk covers every edge exactly once.

Construction starts from the all-rotating system and repeatedly rewires
one vertex shared by two distinct walks so that the walks merge; the
walk count strictly decreases, so this terminates in a single circuit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Hashable, Iterator, Mapping, NamedTuple

from .star_graph import AngleRelation, HalfEdge, StarGraph, slot_relation

Matching = tuple[tuple[int, int], ...]
TransitionSystem = Mapping[Hashable, Matching]


class VertexKind(Enum):
    ROTATING = "rotating"
    SPLITTING = "splitting"
    NEITHER = "neither"


def normalize_matching(pairs) -> Matching:
    return tuple(sorted(tuple(sorted(p)) for p in pairs))


_ROTATING = {
    4: (
        normalize_matching([(0, 1), (2, 3)]),
        normalize_matching([(1, 2), (3, 0)]),
    ),
    6: (
        normalize_matching([(0, 1), (2, 3), (4, 5)]),
        normalize_matching([(1, 2), (3, 4), (5, 0)]),
    ),
}

_SPLITTING = (
    normalize_matching([(0, 3), (1, 2), (4, 5)]),
    normalize_matching([(1, 4), (2, 3), (5, 0)]),
    normalize_matching([(2, 5), (3, 4), (0, 1)]),
)


def rotating_matchings(degree: int) -> tuple[Matching, Matching]:
    """The two matchings of a degree-4 or degree-6 vertex with all pairs adjacent."""
    if degree not in _ROTATING:
        raise ValueError(f"no rotating matchings for degree {degree}")
    return _ROTATING[degree]


def splitting_matchings() -> tuple[Matching, Matching, Matching]:
    """The three degree-6 matchings with one opposite and two adjacent pairs."""
    return _SPLITTING


def classify_matching(degree: int, matching: Matching) -> VertexKind:
    """Kind of one vertex matching: rotating, splitting, or neither."""
    if sorted(s for p in matching for s in p) != list(range(degree)):
        raise ValueError(f"not a perfect matching of slots 0..{degree - 1}: {matching}")
    relations = [slot_relation(degree, a, b) for a, b in matching]
    if all(r is AngleRelation.ADJACENT for r in relations):
        return VertexKind.ROTATING
    if (
        degree == 6
        and relations.count(AngleRelation.OPPOSITE) == 1
        and relations.count(AngleRelation.ADJACENT) == 2
    ):
        return VertexKind.SPLITTING
    return VertexKind.NEITHER


def classify_vertex(source, vertex: Hashable) -> VertexKind:
    """Kind of `vertex` inside a transition system or a circuit."""
    if isinstance(source, RotatingSplittingCircuit):
        matching = source.transition_of(vertex)
    else:
        matching = normalize_matching(source[vertex])
    return classify_matching(2 * len(matching), matching)


class Visit(NamedTuple):
    """One passage of the circuit through a vertex."""

    vertex: Hashable
    arrival: int
    departure: int


def _matching_maps(graph: StarGraph, transitions: TransitionSystem) -> dict[HalfEdge, int]:
    """Slot partner under the vertex matching, as a half-edge keyed map."""
    partner: dict[HalfEdge, int] = {}
    for v, d in graph.vertex_degrees:
        matching = transitions[v]
        if sorted(s for p in matching for s in p) != list(range(d)):
            raise ValueError(f"transition at {v!r} is not a perfect matching of its slots")
        for a, b in matching:
            partner[HalfEdge(v, a)] = b
            partner[HalfEdge(v, b)] = a
    return partner


def _directed_cycles(
    graph: StarGraph, transitions: TransitionSystem
) -> tuple[list[tuple[HalfEdge, ...]], dict[HalfEdge, int]]:
    """Cycles of departure half-edges under next = passage-partner after edge-partner."""
    ep = graph.edge_partner_map
    pp = _matching_maps(graph, transitions)
    order = list(graph.half_edges())
    cycles: list[tuple[HalfEdge, ...]] = []
    cycle_of: dict[HalfEdge, int] = {}
    for start in order:
        if start in cycle_of:
            continue
        cycle = []
        h = start
        while True:
            cycle.append(h)
            cycle_of[h] = len(cycles)
            arrived = ep[h]
            h = HalfEdge(arrived.vertex, pp[arrived])
            if h == start:
                break
        cycles.append(tuple(cycle))
    return cycles, cycle_of


def _walks(
    graph: StarGraph, transitions: TransitionSystem
) -> tuple[list[tuple[HalfEdge, ...]], dict[HalfEdge, int]]:
    """Undirected closed walks: directed cycles paired with their reversals.

    Returns one representative cycle per walk (the one holding the least
    half-edge, started there) and a walk id for every half-edge.
    """
    cycles, cycle_of = _directed_cycles(graph, transitions)
    ep = graph.edge_partner_map
    vindex = graph.vertex_index

    def he_key(h: HalfEdge) -> tuple[int, int]:
        return (vindex(h.vertex), h.slot)

    walk_id: dict[int, int] = {}
    reps: list[tuple[HalfEdge, ...]] = []
    for i, cycle in enumerate(cycles):
        if i in walk_id:
            continue
        # the reverse traversal departs along the edge partners
        mate = cycle_of[ep[cycle[0]]]
        if mate == i:
            raise AssertionError("directed cycle equals its own reversal")
        wid = len(reps)
        walk_id[i] = wid
        walk_id[mate] = wid
        best = min(cycle, key=he_key)
        mate_best = min(cycles[mate], key=he_key)
        rep = cycle if he_key(best) <= he_key(mate_best) else cycles[mate]
        start = min(range(len(rep)), key=lambda k: he_key(rep[k]))
        reps.append(rep[start:] + rep[:start])
    return reps, {h: walk_id[c] for h, c in cycle_of.items()}


def cycles_of(graph: StarGraph, transitions: TransitionSystem) -> tuple[tuple[HalfEdge, ...], ...]:
    """The closed walks a transition system cuts the graph into.

    Each walk is reported once, as the sequence of departure half-edges
    of its canonical direction, starting at its least half-edge.
    """
    reps, _ = _walks(graph, transitions)
    return tuple(reps)


def _external_matching(graph: StarGraph, transitions: TransitionSystem, vertex: Hashable) -> Matching:
    """Pair each slot of `vertex` with the slot the walk re-enters through.

    Follows the traversal leaving slot s, ignoring the matching at
    `vertex` itself, until it first returns to `vertex`.
    """
    ep = graph.edge_partner_map
    pp = _matching_maps(graph, transitions)
    degree = graph.degree_of(vertex)
    pairs = []
    seen: set[int] = set()
    for s in range(degree):
        if s in seen:
            continue
        h = ep[HalfEdge(vertex, s)]
        while h.vertex != vertex:
            h = ep[HalfEdge(h.vertex, pp[h])]
        t = h.slot
        if t == s or t in seen:
            raise AssertionError("external matching is not a pairing")
        seen.add(s)
        seen.add(t)
        pairs.append((s, t))
    return normalize_matching(pairs)


def _single_alternating_cycle(external: Matching, matching: Matching) -> bool:
    """True when the union of the two slot matchings forms one 6-cycle."""
    ext = {a: b for a, b in external} | {b: a for a, b in external}
    own = {a: b for a, b in matching} | {b: a for a, b in matching}
    # alternate ext/own steps from slot 0; each step pair passes 2 slots
    slots_passed = 0
    x = 0
    while True:
        x = own[ext[x]]
        slots_passed += 2
        if x == 0:
            break
    return slots_passed == len(ext)


@dataclass(frozen=True)
class RotatingSplittingCircuit:
    """A single closed walk covering every edge once, with its transition system.

    `visits[i]` is the passage at circle position i; the walk leaves
    position i along the half-edge (vertex, departure) and arrives at
    position i+1 through that edge's other half-edge.
    """

    graph: StarGraph
    transitions: tuple[tuple[Hashable, Matching], ...]
    visits: tuple[Visit, ...]

    @cached_property
    def _transition_map(self) -> dict[Hashable, Matching]:
        return dict(self.transitions)

    def transition_of(self, vertex: Hashable) -> Matching:
        return self._transition_map[vertex]

    def vertex_kind(self, vertex: Hashable) -> VertexKind:
        return classify_matching(self.graph.degree_of(vertex), self.transition_of(vertex))

    @cached_property
    def _positions(self) -> dict[Hashable, tuple[int, ...]]:
        pos: dict[Hashable, list[int]] = {v: [] for v in self.graph.vertices}
        for i, visit in enumerate(self.visits):
            pos[visit.vertex].append(i)
        return {v: tuple(p) for v, p in pos.items()}

    def positions_of(self, vertex: Hashable) -> tuple[int, ...]:
        """Circle positions of the passages through `vertex`, ascending."""
        return self._positions[vertex]

    def visit_at(self, position: int) -> Visit:
        return self.visits[position % len(self.visits)]

    def edge_traversals(self) -> Iterator[tuple[HalfEdge, HalfEdge]]:
        """(departure, arrival) half-edge pairs between consecutive visits."""
        ep = self.graph.edge_partner_map
        for visit in self.visits:
            dep = HalfEdge(visit.vertex, visit.departure)
            yield dep, ep[dep]

    def validate_circuit(self) -> list[str]:
        """Check the circuit invariants, returning every violation found."""
        problems: list[str] = []
        graph = self.graph
        ep = graph.edge_partner_map
        for v, d in graph.vertex_degrees:
            kind = self.vertex_kind(v)
            if kind is VertexKind.NEITHER:
                problems.append(f"vertex {v!r} uses a matching that is neither kind")
            count = len(self.positions_of(v))
            if count != d // 2:
                problems.append(f"vertex {v!r} visited {count} times, expected {d // 2}")
        n = len(self.visits)
        if n != len(graph.edges):
            problems.append(f"{n} traversals for {len(graph.edges)} edges")
        used: set[frozenset[HalfEdge]] = set()
        for i, visit in enumerate(self.visits):
            matching = self._transition_map[visit.vertex]
            if tuple(sorted((visit.arrival, visit.departure))) not in matching:
                problems.append(f"visit {i} does not follow the matching at {visit.vertex!r}")
            dep = HalfEdge(visit.vertex, visit.departure)
            arr = ep.get(dep)
            nxt = self.visits[(i + 1) % n]
            if arr is None or arr != HalfEdge(nxt.vertex, nxt.arrival):
                problems.append(f"visit {i} does not chain into visit {(i + 1) % n}")
            edge = frozenset((dep, arr)) if arr is not None else frozenset((dep,))
            if edge in used:
                problems.append(f"edge of visit {i} traversed more than once")
            used.add(edge)
        return problems


def _visits_from_walk(
    graph: StarGraph, transitions: TransitionSystem, walk: tuple[HalfEdge, ...]
) -> tuple[Visit, ...]:
    ep = graph.edge_partner_map
    pp = _matching_maps(graph, transitions)
    visits = []
    for i, dep in enumerate(walk):
        arrived = ep[dep]
        out = pp[arrived]
        nxt = walk[(i + 1) % len(walk)]
        if HalfEdge(arrived.vertex, out) != nxt:
            raise AssertionError("walk is not closed under the transition system")
        visits.append(Visit(arrived.vertex, arrived.slot, out))
    return tuple(visits)


def build_rotating_splitting_circuit(
    graph: StarGraph, seed: int | None = None
) -> RotatingSplittingCircuit:
    """Build a rotating-splitting circuit covering every edge exactly once.

    With `seed` unset the construction is fully deterministic: it starts
    from the first rotating matching everywhere, always rewires the
    first shared vertex in vertex order, tries replacement matchings in
    a fixed order, and reports the walk from its least half-edge. With a
    seed it makes the same kinds of choices at random, reproducibly.

    Raises:
        ValueError: if the graph is empty, malformed, or disconnected.
    """
    problems = graph.validate()
    if problems:
        raise ValueError("invalid graph: " + "; ".join(problems))
    if not graph.vertex_degrees:
        raise ValueError("cannot build a circuit on an empty graph")
    if not graph.is_connected():
        raise ValueError("cannot build a circuit on a disconnected graph")

    rng = random.Random(seed) if seed is not None else None
    transitions: dict[Hashable, Matching] = {}
    for v, d in graph.vertex_degrees:
        options = rotating_matchings(d)
        transitions[v] = rng.choice(options) if rng else options[0]

    guard = len(graph.edges) + len(graph.vertex_degrees) + 2
    for _ in range(guard):
        reps, walk_id = _walks(graph, transitions)
        if len(reps) == 1:
            break
        shared = []
        for v, d in graph.vertex_degrees:
            ids = {walk_id[HalfEdge(v, s)] for s in range(d)}
            if len(ids) >= 2:
                shared.append(v)
        if not shared:
            raise AssertionError("multiple walks but no shared vertex on a connected graph")
        v = rng.choice(shared) if rng else shared[0]
        d = graph.degree_of(v)
        if d == 4:
            first, second = rotating_matchings(4)
            transitions[v] = second if transitions[v] == first else first
            continue
        external = _external_matching(graph, transitions, v)
        relations = [slot_relation(6, a, b) for a, b in external]
        needs_splitting = (
            relations.count(AngleRelation.OPPOSITE) == 1
            and relations.count(AngleRelation.ADJACENT) == 2
        )
        options = list(splitting_matchings() if needs_splitting else rotating_matchings(6))
        if rng:
            rng.shuffle(options)
        for candidate in options:
            if _single_alternating_cycle(external, candidate):
                transitions[v] = candidate
                break
        else:
            raise AssertionError("no matching merges the walks at a shared degree-6 vertex")
    else:
        raise AssertionError("circuit construction did not converge")

    walk = reps[0]
    if rng:
        ep = graph.edge_partner_map
        if rng.random() < 0.5:
            walk = tuple(reversed([ep[h] for h in walk]))
        shift = rng.randrange(len(walk))
        walk = walk[shift:] + walk[:shift]
    visits = _visits_from_walk(graph, transitions, walk)
    ordered = tuple((v, transitions[v]) for v, _ in graph.vertex_degrees)
    return RotatingSplittingCircuit(graph=graph, transitions=ordered, visits=visits)


def twisted_angles(circuit: RotatingSplittingCircuit, vertex: Hashable) -> tuple[bool, ...]:
    """Twist flags of the passages through a rotating degree-6 vertex.

    The three passages sweep three pairwise nonadjacent angles around
    the vertex (angle s lies between slots s and s+1). The cyclic order
    in which the circuit visits those angles orients the neighborhood of
    the vertex, and a passage is twisted when its own sweep direction
    disagrees with that orientation. Both ingredients flip together
    under reversal of the traversal, so the flags depend only on the
    circuit's transition system, not on its direction or starting point.

    Flags are listed in circle-position order of the passages.

    Raises:
        ValueError: if `vertex` is not a rotating degree-6 vertex.
    """
    if circuit.graph.degree_of(vertex) != 6:
        raise ValueError(f"vertex {vertex!r} does not have degree 6")
    if circuit.vertex_kind(vertex) is not VertexKind.ROTATING:
        raise ValueError(f"vertex {vertex!r} is not rotating in this circuit")
    angles = []
    senses = []
    for position in circuit.positions_of(vertex):
        visit = circuit.visits[position]
        if visit.departure == (visit.arrival + 1) % 6:
            angles.append(visit.arrival)
            senses.append(1)
        elif visit.departure == (visit.arrival - 1) % 6:
            angles.append(visit.departure)
            senses.append(-1)
        else:
            raise AssertionError("rotating passage is not to a neighboring slot")
    step = (angles[1] - angles[0]) % 6
    if step == 2:
        induced = 1
    elif step == 4:
        induced = -1
    else:
        raise AssertionError("rotating passages do not sweep alternating angles")
    return tuple(sense != induced for sense in senses)
