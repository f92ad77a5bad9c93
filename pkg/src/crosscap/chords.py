"""Signed chord diagrams derived from circuits, and their surgery calculus.

A circuit visits each vertex degree/2 times; marking those visit
positions on a circle and recording how each vertex ties its positions
together yields a diagram of signed elements: plain chords for degree-4
vertices, triads for rotating degree-6 vertices, and double chords for
splitting degree-6 vertices. Expansion rewrites triads and double
chords into pairs of plain chords, giving an ordinary signed chord
diagram whose GF(2) intersection matrix controls the embedding genus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .circuits import RotatingSplittingCircuit, VertexKind, twisted_angles
from .gf2 import Gf2Matrix
from .star_graph import AngleRelation, slot_relation

POSITIVE = 1
NEGATIVE = -1

FREE = "free"
TRIAD = "triad"
DOUBLE = "double"

Group = tuple[str, Hashable]


def _check_sign(sign: int) -> None:
    if sign not in (POSITIVE, NEGATIVE):
        raise ValueError(f"sign must be +1 or -1, got {sign}")


@dataclass(frozen=True)
class StarChord:
    """Degree-4 element: one chord between the vertex's two positions."""

    positions: tuple[int, int]
    sign: int
    vertex: Hashable


@dataclass(frozen=True)
class Triad:
    """Rotating degree-6 element: three positions, one sign per position."""

    positions: tuple[int, int, int]
    signs: tuple[int, int, int]
    vertex: Hashable


@dataclass(frozen=True)
class DoubleChord:
    """Splitting degree-6 element: a principal position joined to two outers."""

    principal: int
    outers: tuple[int, int]
    signs: tuple[int, int]
    vertex: Hashable


StarElement = StarChord | Triad | DoubleChord


@dataclass(frozen=True)
class StarChordDiagram:
    """All vertex elements of one circuit, on circle positions 0..point_count-1."""

    point_count: int
    elements: tuple[StarElement, ...]

    def validate(self) -> list[str]:
        problems: list[str] = []
        used: set[int] = set()
        for element in self.elements:
            if isinstance(element, StarChord):
                points = element.positions
                signs = (element.sign,)
            elif isinstance(element, Triad):
                points = element.positions
                signs = element.signs
            else:
                points = (element.principal, *element.outers)
                signs = element.signs
            for p in points:
                if not 0 <= p < self.point_count:
                    problems.append(f"position {p} out of range at vertex {element.vertex!r}")
                if p in used:
                    problems.append(f"position {p} used twice")
                used.add(p)
            for s in signs:
                if s not in (POSITIVE, NEGATIVE):
                    problems.append(f"invalid sign {s} at vertex {element.vertex!r}")
        if len(used) != self.point_count:
            problems.append("some circle positions carry no element")
        return problems


@dataclass(frozen=True)
class Chord:
    """A signed chord with a group tag tying expansion siblings together.

    `origins` records which positions of the source diagram the
    endpoints came from; it is provenance only and does not take part in
    equality.
    """

    a: int
    b: int
    sign: int
    group: Group
    origins: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.a >= self.b:
            raise ValueError(f"chord endpoints must satisfy a < b, got ({self.a}, {self.b})")
        _check_sign(self.sign)
        if self.group[0] not in (FREE, TRIAD, DOUBLE):
            raise ValueError(f"unknown group kind {self.group[0]!r}")

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.a, self.b)


def linked(c1: Chord, c2: Chord) -> bool:
    """True when the chords' endpoints interleave around the circle."""
    return (c1.a < c2.a < c1.b < c2.b) or (c2.a < c1.a < c2.b < c1.b)


@dataclass(frozen=True)
class ChordDiagram:
    """Plain signed chords on a circle of `point_count` marked points.

    Chords are kept sorted by endpoints. Points not used by any chord
    are allowed (side diagrams of a partition keep all points); a full
    expansion uses every point exactly once.
    """

    point_count: int
    chords: tuple[Chord, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "chords", tuple(sorted(self.chords, key=lambda c: (c.a, c.b)))
        )

    def validate(self, require_full: bool = False) -> list[str]:
        problems: list[str] = []
        used: set[int] = set()
        for chord in self.chords:
            for p in chord.endpoints:
                if not 0 <= p < self.point_count:
                    problems.append(f"endpoint {p} out of range")
                if p in used:
                    problems.append(f"point {p} used by two chord ends")
                used.add(p)
        groups: dict[Group, list[int]] = {}
        for i, chord in enumerate(self.chords):
            groups.setdefault(chord.group, []).append(i)
        for group, members in groups.items():
            expected = 1 if group[0] == FREE else 2
            if len(members) != expected:
                problems.append(
                    f"group {group!r} has {len(members)} chords, expected {expected}"
                )
        if require_full and len(used) != self.point_count:
            problems.append("some points are not chord endpoints")
        return problems

    def groups(self) -> tuple[tuple[Group, tuple[int, ...]], ...]:
        """Chord indices per group tag, ordered by first chord index."""
        order: dict[Group, list[int]] = {}
        for i, chord in enumerate(self.chords):
            order.setdefault(chord.group, []).append(i)
        return tuple((g, tuple(ix)) for g, ix in order.items())


def build_star_chord_diagram(
    graph, circuit: RotatingSplittingCircuit
) -> StarChordDiagram:
    """Read the signed element of every vertex off a circuit.

    Degree-4 chords are positive when the two arrival slots are not
    adjacent. Triad positions are positive when their passage is
    untwisted. Double-chord outers are positive when their departure
    slot is adjacent to the principal passage's arrival slot.
    """
    elements: list[StarElement] = []
    for v, d in graph.vertex_degrees:
        positions = circuit.positions_of(v)
        visits = [circuit.visits[p] for p in positions]
        kind = circuit.vertex_kind(v)
        if d == 4:
            rel = slot_relation(4, visits[0].arrival, visits[1].arrival)
            sign = NEGATIVE if rel is AngleRelation.ADJACENT else POSITIVE
            elements.append(StarChord((positions[0], positions[1]), sign, v))
        elif kind is VertexKind.ROTATING:
            twists = twisted_angles(circuit, v)
            signs = tuple(NEGATIVE if t else POSITIVE for t in twists)
            elements.append(Triad(tuple(positions), signs, v))  # type: ignore[arg-type]
        else:
            principal = None
            outers = []
            for p, visit in zip(positions, visits):
                rel = slot_relation(6, visit.arrival, visit.departure)
                if rel is AngleRelation.OPPOSITE:
                    principal = p
                else:
                    outers.append((p, visit))
            if principal is None or len(outers) != 2:
                raise AssertionError("splitting vertex lacks its opposite passage")
            arrival = circuit.visits[principal].arrival
            signs = tuple(
                POSITIVE
                if slot_relation(6, visit.departure, arrival) is AngleRelation.ADJACENT
                else NEGATIVE
                for _, visit in outers
            )
            elements.append(
                DoubleChord(principal, (outers[0][0], outers[1][0]), signs, v)  # type: ignore[arg-type]
            )
    return StarChordDiagram(len(circuit.visits), tuple(elements))


def _expansion_pairings(
    anchor: int, sides: tuple[int, int], others: tuple[int, int], point_count: int
) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Both ways to join the doubled anchor to the two other positions.

    `sides` holds the new indices of (anchor-eps, anchor+eps). The
    pairing that puts anchor-eps with the position met first when
    walking forward from the anchor is listed first.
    """
    x, y = others
    steps_to = {
        x: (x - anchor) % point_count,
        y: (y - anchor) % point_count,
    }
    near, far = (x, y) if steps_to[x] < steps_to[y] else (y, x)
    minus, plus = sides
    return [((minus, near), (plus, far)), ((minus, far), (plus, near))]


def expand(diagram: StarChordDiagram) -> ChordDiagram:
    """Rewrite triads and double chords into pairs of plain chords.

    One point of each triad and the principal of each double chord is
    doubled into two consecutive points. A triad with a positive
    position doubles its least positive position and joins it to the
    other two by an unlinked chord pair keeping their signs; an
    all-negative triad doubles its least position and joins it by a
    linked pair with both signs made positive. A double chord joins the
    doubled principal to its outers by an unlinked pair keeping the
    outer signs. Plain chords are copied.
    """
    problems = diagram.validate()
    if problems:
        raise ValueError("invalid star chord diagram: " + "; ".join(problems))

    doubled: dict[int, Hashable] = {}
    for element in diagram.elements:
        if isinstance(element, Triad):
            positive = [p for p, s in zip(element.positions, element.signs) if s == POSITIVE]
            anchor = min(positive) if positive else min(element.positions)
            doubled[anchor] = element.vertex
        elif isinstance(element, DoubleChord):
            doubled[element.principal] = element.vertex

    index_of: dict[tuple[int, int], int] = {}
    counter = 0
    for p in range(diagram.point_count):
        if p in doubled:
            index_of[(p, -1)] = counter
            index_of[(p, +1)] = counter + 1
            counter += 2
        else:
            index_of[(p, 0)] = counter
            counter += 1

    def single(p: int) -> int:
        return index_of[(p, 0)]

    chords: list[Chord] = []
    for element in diagram.elements:
        if isinstance(element, StarChord):
            p, q = sorted(element.positions)
            chords.append(
                Chord(single(p), single(q), element.sign, (FREE, element.vertex), (p, q))
            )
            continue

        if isinstance(element, Triad):
            sign_at = dict(zip(element.positions, element.signs))
            positive = [p for p in element.positions if sign_at[p] == POSITIVE]
            anchor = min(positive) if positive else min(element.positions)
            others = tuple(p for p in element.positions if p != anchor)
            want_linked = not positive
            kind = TRIAD
            chord_sign = lambda p: POSITIVE if want_linked else sign_at[p]  # noqa: E731
        else:
            anchor = element.principal
            others = element.outers
            sign_at = dict(zip(element.outers, element.signs))
            want_linked = False
            kind = DOUBLE
            chord_sign = lambda p: sign_at[p]  # noqa: E731

        sides = (index_of[(anchor, -1)], index_of[(anchor, +1)])
        targets = {p: single(p) for p in others}
        for (end1, o1), (end2, o2) in _expansion_pairings(
            anchor, sides, others, diagram.point_count  # type: ignore[arg-type]
        ):
            c1 = Chord(*sorted((end1, targets[o1])), chord_sign(o1), (kind, element.vertex), tuple(sorted((anchor, o1))))  # type: ignore[misc]
            c2 = Chord(*sorted((end2, targets[o2])), chord_sign(o2), (kind, element.vertex), tuple(sorted((anchor, o2))))  # type: ignore[misc]
            if linked(c1, c2) == want_linked:
                chords.extend((c1, c2))
                break
        else:
            raise AssertionError("no admissible pairing for a doubled point")

    result = ChordDiagram(counter, tuple(chords))
    if result.point_count != 2 * len(result.chords):
        raise AssertionError("expansion did not produce two points per chord")
    return result


def _circle_components(point_count: int, edges: Iterable[tuple[int, int]]) -> int:
    parent = list(range(2 * point_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for x, y in edges:
        union(x, y)
    return len({find(x) for x in range(2 * point_count)})


def surgery_circle_count(diagram: ChordDiagram) -> int:
    """Number of circles after cutting the circle open along every chord.

    Each point p splits into an incoming side 2p and an outgoing side
    2p+1. Circle arcs join outgoing sides to the next incoming side. A
    positive chord joins each side of one endpoint to the opposite side
    of the other; a negative chord joins like sides. Points without a
    chord pass straight through. The empty diagram counts one circle.
    """
    n = diagram.point_count
    if n == 0:
        return 1

    def incoming(p: int) -> int:
        return 2 * p

    def outgoing(p: int) -> int:
        return 2 * p + 1

    edges: list[tuple[int, int]] = []
    for p in range(n):
        edges.append((outgoing(p), incoming((p + 1) % n)))
    used: set[int] = set()
    for chord in diagram.chords:
        a, b = chord.endpoints
        used.update((a, b))
        if chord.sign == POSITIVE:
            edges.append((outgoing(a), incoming(b)))
            edges.append((incoming(a), outgoing(b)))
        else:
            edges.append((outgoing(a), outgoing(b)))
            edges.append((incoming(a), incoming(b)))
    for p in range(n):
        if p not in used:
            edges.append((incoming(p), outgoing(p)))
    return _circle_components(n, edges)


def intersection_matrix(diagram: ChordDiagram) -> Gf2Matrix:
    """GF(2) matrix with 1s for linked chord pairs and for negative chords."""
    n = len(diagram.chords)
    rows = [0] * n
    for i, ci in enumerate(diagram.chords):
        if ci.sign == NEGATIVE:
            rows[i] |= 1 << i
        for j in range(i + 1, n):
            if linked(ci, diagram.chords[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Gf2Matrix(n, tuple(rows))


def _reverse_segment_with_map(
    diagram: ChordDiagram, chord_index: int
) -> tuple[ChordDiagram, dict[int, int]]:
    chords = diagram.chords
    if not 0 <= chord_index < len(chords):
        raise ValueError(f"no chord with index {chord_index}")
    pivot = chords[chord_index]
    if pivot.sign != NEGATIVE:
        raise ValueError("segment reversal requires a negative chord")

    p, q = pivot.endpoints
    n = diagram.point_count

    def relocate(x: int) -> int:
        # drop the pivot's endpoints, reverse the stretch strictly between them
        if x < p:
            return x
        if p < x < q:
            return p + (q - 1 - x)
        return x - 2

    rebuilt: list[tuple[Chord, int]] = []
    for i, chord in enumerate(chords):
        if i == chord_index:
            continue
        inside = sum(1 for x in chord.endpoints if p < x < q)
        sign = chord.sign if inside != 1 else -chord.sign
        a, b = sorted(relocate(x) for x in chord.endpoints)
        rebuilt.append((Chord(a, b, sign, chord.group, chord.origins), i))

    rebuilt.sort(key=lambda pair: (pair[0].a, pair[0].b))
    index_map = {old: new for new, (_, old) in enumerate(rebuilt)}
    new_diagram = ChordDiagram(n - 2, tuple(c for c, _ in rebuilt))
    return new_diagram, index_map


def reverse_segment_transform(diagram: ChordDiagram, chord_index: int) -> ChordDiagram:
    """Remove a negative chord and reverse the segment between its endpoints.

    The reversed stretch is the run of points strictly between the
    chord's endpoints (the arc not containing point 0). Chords with
    exactly one endpoint in that stretch, the ones linked with the
    removed chord, flip sign; group tags are kept. Applied to a diagram
    holding a single negative chord this yields the empty diagram.
    """
    new_diagram, _ = _reverse_segment_with_map(diagram, chord_index)
    return new_diagram
