"""
Star graphs and their rotating-splitting circuits
=================================================

A star graph has vertices of degree 4 or 6, each with a cyclic
numbering of its half-edge slots. This demo builds a few of them,
inspects the slot relations, and walks the single closed circuit the
package threads through every edge.
"""

from pathlib import Path

from crosscap import (
    AngleRelation,
    StarGraph,
    build_rotating_splitting_circuit,
    parse_graph,
    slot_relation,
    twisted_angles,
)

DATA = Path(__file__).parent / "data"

# slots around a degree-6 vertex: distance 1 is adjacent, distance 3 is
# opposite, distance 2 is neither
print("slot relations at degree 6:")
for pair in [(0, 1), (0, 2), (0, 3), (2, 5)]:
    print(f"  slots {pair}: {slot_relation(6, *pair).value}")

# graphs can be built in code or read from a small text format
g1 = parse_graph((DATA / "g1.star").read_text())
print("\ng1 edges:", [tuple(h.slot for h in e) for e in g1.edges])
print("g1 well formed:", g1.validate() == [])

# the same constructor rejects malformed inputs with precise messages
broken = StarGraph.build({"v0": 4}, [(("v0", 0), ("v0", 1))])
print("broken graph problems:", broken.validate())

# a circuit visits each vertex degree/2 times and uses each edge once;
# every vertex follows either a rotating or a splitting slot matching
for name in ("g1", "g3", "g4"):
    graph = parse_graph((DATA / f"{name}.star").read_text())
    circuit = build_rotating_splitting_circuit(graph)
    print(f"\n{name} circuit:")
    for visit in circuit.visits:
        print(f"  enter slot {visit.arrival}, leave slot {visit.departure}")
    print("  vertex kind:", circuit.vertex_kind("v0").value)

# at a rotating degree-6 vertex each passage sweeps one angle; a passage
# is twisted when its sweep direction disagrees with the cyclic order in
# which the circuit meets the three angles
g3 = parse_graph((DATA / "g3.star").read_text())
circuit = build_rotating_splitting_circuit(g3)
print("\ng3 twisted passages:", twisted_angles(circuit, "v0"))
