"""
The nonorientable genus spectrum
================================

A checkerboard embedding of a star graph corresponds to a permissible
two-sided partition of its expanded chord diagram, and the embedding
surface has nonorientable genus rank(W side) + rank(B side). Sweeping
all partitions yields the full spectrum of achievable genera.
"""

from pathlib import Path

from crosscap import (
    Orientability,
    derive_diagrams,
    genus_of_partition,
    genus_spectrum,
    is_genus_achievable,
    iter_permissible_partitions,
    parse_graph,
)

DATA = Path(__file__).parent / "data"

# all-positive diagrams never model a nonorientable embedding; the gate
# reports them instead of producing an empty search
for name in ("g1", "g2", "g3", "g4"):
    graph = parse_graph((DATA / f"{name}.star").read_text())
    report = genus_spectrum(graph)
    if report.orientability is Orientability.ORIENTABLE:
        print(f"{name}: orientable gate, no spectrum")
    else:
        witnesses = {g: "".join(report.witness_for(g)) for g in report.spectrum}
        print(f"{name}: spectrum {list(report.spectrum)} witnesses {witnesses}")

# each partition respects the group rules: triad siblings together,
# double-chord siblings apart, free chords anywhere
g3 = parse_graph((DATA / "g3.star").read_text())
derived = derive_diagrams(g3)
print("\ng3 permissible partitions and their rank sums:")
for sides in iter_permissible_partitions(derived.expanded, canonical=False):
    print(f"  {''.join(sides)} -> genus {genus_of_partition(derived.expanded, sides)}")

# membership queries answer one genus at a time
g1 = parse_graph((DATA / "g1.star").read_text())
print("\ng1 embeds with one crosscap:", is_genus_achievable(g1, 1))
print("g1 embeds with two crosscaps:", is_genus_achievable(g1, 2))
print("g3 embeds with two crosscaps:", is_genus_achievable(g3, 2))
