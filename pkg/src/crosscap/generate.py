"""Random and exhaustive generators of graphs and diagrams for testing."""

from __future__ import annotations

import random
from typing import Iterator, Sequence

from .chords import FREE, NEGATIVE, POSITIVE, Chord, ChordDiagram
from .star_graph import HalfEdge, StarGraph


def all_matchings(points: Sequence[int]) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every perfect matching of an even-sized point list."""
    items = list(points)
    if not items:
        yield ()
        return
    if len(items) % 2:
        raise ValueError("cannot match an odd number of points")
    first = items[0]
    for k in range(1, len(items)):
        rest = items[1:k] + items[k + 1 :]
        for sub in all_matchings(rest):
            yield ((first, items[k]),) + sub


def all_diagrams(max_chords: int) -> Iterator[ChordDiagram]:
    """Every signed chord diagram with up to `max_chords` free chords."""
    for m in range(max_chords + 1):
        for matching in all_matchings(range(2 * m)):
            for mask in range(1 << m):
                chords = tuple(
                    Chord(
                        a,
                        b,
                        NEGATIVE if (mask >> i) & 1 else POSITIVE,
                        (FREE, i),
                        (a, b),
                    )
                    for i, (a, b) in enumerate(matching)
                )
                yield ChordDiagram(2 * m, chords)


def random_diagram(rng: random.Random, chords: int, negative_rate: float = 0.5) -> ChordDiagram:
    """A uniform random pairing of 2*`chords` points with random signs."""
    points = list(range(2 * chords))
    rng.shuffle(points)
    built = []
    for i in range(chords):
        a, b = sorted((points[2 * i], points[2 * i + 1]))
        sign = NEGATIVE if rng.random() < negative_rate else POSITIVE
        built.append(Chord(a, b, sign, (FREE, i), (a, b)))
    return ChordDiagram(2 * chords, tuple(built))


def random_star_graph(
    rng: random.Random, max_vertices: int = 6, max_attempts: int = 1000
) -> StarGraph:
    """A random connected star graph with 1..`max_vertices` vertices."""
    for _ in range(max_attempts):
        n = rng.randint(1, max_vertices)
        degrees = [(f"v{i}", rng.choice((4, 6))) for i in range(n)]
        slots = [HalfEdge(v, s) for v, d in degrees for s in range(d)]
        rng.shuffle(slots)
        edges = tuple(
            (slots[2 * i], slots[2 * i + 1]) for i in range(len(slots) // 2)
        )
        graph = StarGraph.build(degrees, edges)
        if graph.is_connected():
            return graph
    raise RuntimeError("could not generate a connected graph")


def two_vertex_graphs() -> Iterator[StarGraph]:
    """Every connected star graph on one or two vertices.

    Half-edges are labeled, so isomorphic graphs appear repeatedly; the
    enumeration is exhaustive over matchings of the labeled slots.
    """
    degree_lists = ([4], [6], [4, 4], [4, 6], [6, 6])
    for degs in degree_lists:
        degrees = [(f"v{i}", d) for i, d in enumerate(degs)]
        slots = [HalfEdge(v, s) for v, d in degrees for s in range(d)]
        for matching in all_matchings(range(len(slots))):
            edges = tuple((slots[a], slots[b]) for a, b in matching)
            graph = StarGraph.build(degrees, edges)
            if graph.is_connected():
                yield graph
