"""
From circuits to signed chord diagrams
======================================

The circuit through a star graph turns each vertex into a chord-like
element on a circle: degree-4 vertices give one signed chord, rotating
degree-6 vertices give a triad, splitting ones give a double chord.
Expansion rewrites triads and doubles as plain chord pairs so that rank
arguments apply.
"""

from pathlib import Path

from crosscap import (
    build_rotating_splitting_circuit,
    build_star_chord_diagram,
    derive_diagrams,
    expand,
    format_star_diagram,
    intersection_matrix,
    linked,
    parse_graph,
    surgery_circle_count,
)

DATA = Path(__file__).parent / "data"


def star_diagram_of(name):
    graph = parse_graph((DATA / f"{name}.star").read_text())
    circuit = build_rotating_splitting_circuit(graph)
    return graph, build_star_chord_diagram(graph, circuit)


# one element per vertex, with signs read off the circuit geometry
for name in ("g1", "g2", "g3", "g4"):
    graph, star = star_diagram_of(name)
    print(f"{name}: {format_star_diagram(star)!r}")

# expansion: a triad becomes two chords that share a group tag and must
# stay on the same side of any partition; a double chord becomes two
# chords that must separate
g3 = parse_graph((DATA / "g3.star").read_text())
derived = derive_diagrams(g3)
print("\ng3 expanded chords:")
for chord in derived.expanded.chords:
    print(f"  ({chord.a}, {chord.b}) sign {chord.sign:+d} group {chord.group}")
print("expanded pair linked:", linked(*derived.expanded.chords))

# the intersection matrix over GF(2) has ones on the diagonal for
# negative chords and ones off the diagonal for linked pairs
print("g3 intersection matrix:", derived.matrix.to_dense())

# surgery along all chords leaves 1 + corank circles, the central
# counting identity behind every genus computation in the package
print("\nsurgery circles vs corank:")
for name in ("g1", "g2", "g3", "g4"):
    graph, star = star_diagram_of(name)
    dprime = expand(star)
    circles = surgery_circle_count(dprime)
    corank = intersection_matrix(dprime).corank
    print(f"  {name}: circles={circles} corank+1={corank + 1}")
