"""Text file formats for star graphs and chord diagrams.

Graph files: `#` starts a comment; `vertex <name> <4|6>` declares a
vertex; `edge <name>.<slot> <name>.<slot>` pairs two half-edges. Names
are alphanumeric-with-underscore tokens, slots are decimal.

Diagram files: a `points <count>` header, then one
`chord <p> <q> <+|-> <kind>:<vertex>` line per chord, with kind one of
free, triad, double.

Both formats round-trip: parse(format(x)) == x. Group keys written from
integer vertex ids come back as integers (an all-digit token is read as
an int), so diagrams built by the random generators round-trip too.
"""

from __future__ import annotations

import re
from typing import Iterator

from .chords import (
    DOUBLE,
    FREE,
    NEGATIVE,
    POSITIVE,
    TRIAD,
    Chord,
    ChordDiagram,
    DoubleChord,
    StarChord,
    StarChordDiagram,
    Triad,
)
from .star_graph import ALLOWED_DEGREES, HalfEdge, StarGraph

_NAME = re.compile(r"[A-Za-z0-9_]+\Z")
_ENDPOINT = re.compile(r"([A-Za-z0-9_]+)\.(\d+)\Z")

_GROUP_KINDS = (FREE, TRIAD, DOUBLE)


class ParseError(ValueError):
    """A syntax or consistency error in an input file."""

    def __init__(self, lineno: int | None, message: str):
        self.lineno = lineno
        self.message = message
        if lineno is None:
            super().__init__(message)
        else:
            super().__init__(f"line {lineno}: {message}")


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph(text: str) -> StarGraph:
    """Parse graph-file text, raising ParseError on the offending line."""
    degrees: dict[str, int] = {}
    order: list[tuple[str, int]] = []
    edge_rows: list[tuple[int, str, str]] = []
    for lineno, line in _content_lines(text):
        tokens = line.split()
        if tokens[0] == "vertex":
            if len(tokens) != 3:
                raise ParseError(lineno, "expected: vertex <name> <degree>")
            name = tokens[1]
            if not _NAME.match(name):
                raise ParseError(lineno, f"bad vertex name {name!r}")
            if name in degrees:
                raise ParseError(lineno, f"vertex {name!r} declared twice")
            try:
                degree = int(tokens[2])
            except ValueError:
                raise ParseError(lineno, f"bad degree {tokens[2]!r}") from None
            if degree not in ALLOWED_DEGREES:
                raise ParseError(lineno, f"degree must be 4 or 6, got {degree}")
            degrees[name] = degree
            order.append((name, degree))
        elif tokens[0] == "edge":
            if len(tokens) != 3:
                raise ParseError(lineno, "expected: edge <name>.<slot> <name>.<slot>")
            edge_rows.append((lineno, tokens[1], tokens[2]))
        else:
            raise ParseError(lineno, f"unknown directive {tokens[0]!r}")
    used: set[HalfEdge] = set()
    edges: list[tuple[HalfEdge, HalfEdge]] = []
    for lineno, left, right in edge_rows:
        ends = []
        for token in (left, right):
            match = _ENDPOINT.match(token)
            if not match:
                raise ParseError(lineno, f"bad endpoint {token!r}, expected <name>.<slot>")
            name, slot_text = match.groups()
            if name not in degrees:
                raise ParseError(lineno, f"unknown vertex {name!r}")
            slot = int(slot_text)
            if slot >= degrees[name]:
                raise ParseError(
                    lineno, f"slot {slot} out of range for degree {degrees[name]}"
                )
            ends.append(HalfEdge(name, slot))
        if ends[0] == ends[1]:
            raise ParseError(lineno, "edge endpoints must differ")
        for end in ends:
            if end in used:
                raise ParseError(lineno, f"half-edge {end.vertex}.{end.slot} used twice")
            used.add(end)
        edges.append((ends[0], ends[1]))
    graph = StarGraph.build(order, edges)
    problems = graph.validate()
    if problems:
        raise ParseError(None, problems[0])
    return graph


def format_graph(graph: StarGraph) -> str:
    lines = []
    for name, degree in graph.vertex_degrees:
        if not isinstance(name, str) or not _NAME.match(name):
            raise ValueError(f"vertex id {name!r} cannot be written as a name token")
        lines.append(f"vertex {name} {degree}")
    for a, b in graph.edges:
        lines.append(f"edge {a.vertex}.{a.slot} {b.vertex}.{b.slot}")
    return "\n".join(lines) + "\n"


def _sign_char(sign: int) -> str:
    return "+" if sign == POSITIVE else "-"


def _group_key_token(key: object) -> str:
    token = str(key)
    if not _NAME.match(token):
        raise ValueError(f"group key {key!r} cannot be written as a name token")
    return token


def _parse_group(lineno: int, token: str) -> tuple[str, object]:
    kind, sep, key = token.partition(":")
    if not sep or kind not in _GROUP_KINDS or not key:
        raise ParseError(lineno, f"bad group {token!r}, expected <kind>:<vertex>")
    if not _NAME.match(key):
        raise ParseError(lineno, f"bad group vertex {key!r}")
    return (kind, int(key) if key.isdigit() else key)


def parse_diagram(text: str) -> ChordDiagram:
    """Parse diagram-file text, raising ParseError on the offending line."""
    point_count: int | None = None
    chords: list[Chord] = []
    for lineno, line in _content_lines(text):
        tokens = line.split()
        if tokens[0] == "points":
            if point_count is not None:
                raise ParseError(lineno, "duplicate points header")
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError(lineno, "expected: points <count>")
            point_count = int(tokens[1])
        elif tokens[0] == "chord":
            if point_count is None:
                raise ParseError(lineno, "chord line before points header")
            if len(tokens) != 5:
                raise ParseError(lineno, "expected: chord <p> <q> <+|-> <group>")
            if not (tokens[1].isdigit() and tokens[2].isdigit()):
                raise ParseError(lineno, "chord endpoints must be decimal")
            p, q = int(tokens[1]), int(tokens[2])
            if p == q:
                raise ParseError(lineno, "chord endpoints must differ")
            if tokens[3] not in ("+", "-"):
                raise ParseError(lineno, f"bad sign {tokens[3]!r}, expected + or -")
            sign = POSITIVE if tokens[3] == "+" else NEGATIVE
            group = _parse_group(lineno, tokens[4])
            chords.append(Chord(min(p, q), max(p, q), sign, group))
        else:
            raise ParseError(lineno, f"unknown directive {tokens[0]!r}")
    if point_count is None:
        raise ParseError(None, "missing points header")
    diagram = ChordDiagram(point_count, tuple(chords))
    problems = diagram.validate()
    if problems:
        raise ParseError(None, problems[0])
    return diagram


def format_diagram(diagram: ChordDiagram) -> str:
    lines = [f"points {diagram.point_count}"]
    for chord in diagram.chords:
        kind, key = chord.group
        lines.append(
            f"chord {chord.a} {chord.b} {_sign_char(chord.sign)} "
            f"{kind}:{_group_key_token(key)}"
        )
    return "\n".join(lines) + "\n"


def format_star_diagram(diagram: StarChordDiagram) -> str:
    """Human-readable dump of a star diagram (output only, no parser)."""
    lines = [f"points {diagram.point_count}"]
    for element in diagram.elements:
        if isinstance(element, StarChord):
            a, b = element.positions
            lines.append(f"star {element.vertex} chord {a} {b} {_sign_char(element.sign)}")
        elif isinstance(element, Triad):
            pos = " ".join(str(p) for p in element.positions)
            signs = " ".join(_sign_char(s) for s in element.signs)
            lines.append(f"star {element.vertex} triad {pos} signs {signs}")
        elif isinstance(element, DoubleChord):
            a, b = element.outers
            signs = " ".join(_sign_char(s) for s in element.signs)
            lines.append(
                f"star {element.vertex} double principal {element.principal} "
                f"outers {a} {b} signs {signs}"
            )
        else:
            raise TypeError(f"unknown element {element!r}")
    return "\n".join(lines) + "\n"
