"""Checkerboard embeddings of star graphs into nonorientable surfaces.

The pipeline: a star graph (vertices of degree 4 or 6 with a cyclic
half-edge order) gets a rotating-splitting Euler circuit, the circuit
yields a signed star chord diagram, expansion turns it into a plain
signed chord diagram, and GF(2) ranks of the two sides of a permissible
chord partition give the achievable nonorientable genera. Fast
propagation procedures decide projective-plane and Klein-bottle
embeddability; a brute-force atom oracle cross-checks everything.
"""

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
    build_star_chord_diagram,
    expand,
    intersection_matrix,
    linked,
    reverse_segment_transform,
    surgery_circle_count,
)
from .circuits import (
    RotatingSplittingCircuit,
    Visit,
    VertexKind,
    build_rotating_splitting_circuit,
    classify_matching,
    classify_vertex,
    cycles_of,
    normalize_matching,
    rotating_matchings,
    splitting_matchings,
    twisted_angles,
)
from .fast_checks import (
    DecisionReport,
    SeparationWitness,
    klein_case_disc,
    klein_case_mobius,
    klein_embeddable,
    klein_separation,
    pair_visits,
    rp2_embeddable,
    rp2_separation,
)
from .formats import (
    ParseError,
    format_diagram,
    format_graph,
    format_star_diagram,
    parse_diagram,
    parse_graph,
)
from .genus import (
    B,
    DerivedDiagrams,
    GenusReport,
    Orientability,
    W,
    derive_diagrams,
    genus_of_partition,
    genus_spectrum,
    is_genus_achievable,
    is_permissible,
    iter_permissible_partitions,
    orientability_gate,
    spectrum_of_diagram,
)
from .generate import (
    all_diagrams,
    all_matchings,
    random_diagram,
    random_star_graph,
    two_vertex_graphs,
)
from .gf2 import Gf2Matrix, principal_submatrix, rank
from .oracle import (
    AtomSurface,
    atom_spectrum,
    coloring_to_partition,
    separation_surgery_check,
    trace_atom,
)
from .star_graph import (
    ALLOWED_DEGREES,
    AngleRelation,
    HalfEdge,
    StarGraph,
    slot_relation,
)

__version__ = "0.1.0"

__all__ = [
    "ALLOWED_DEGREES",
    "AngleRelation",
    "AtomSurface",
    "B",
    "Chord",
    "ChordDiagram",
    "DOUBLE",
    "DecisionReport",
    "DerivedDiagrams",
    "DoubleChord",
    "FREE",
    "GenusReport",
    "Gf2Matrix",
    "HalfEdge",
    "NEGATIVE",
    "Orientability",
    "POSITIVE",
    "ParseError",
    "RotatingSplittingCircuit",
    "SeparationWitness",
    "StarChord",
    "StarChordDiagram",
    "StarGraph",
    "TRIAD",
    "Triad",
    "VertexKind",
    "Visit",
    "W",
    "all_diagrams",
    "all_matchings",
    "atom_spectrum",
    "build_rotating_splitting_circuit",
    "build_star_chord_diagram",
    "classify_matching",
    "classify_vertex",
    "coloring_to_partition",
    "cycles_of",
    "derive_diagrams",
    "expand",
    "format_diagram",
    "format_graph",
    "format_star_diagram",
    "genus_of_partition",
    "genus_spectrum",
    "intersection_matrix",
    "is_genus_achievable",
    "is_permissible",
    "iter_permissible_partitions",
    "klein_case_disc",
    "klein_case_mobius",
    "klein_embeddable",
    "klein_separation",
    "linked",
    "normalize_matching",
    "orientability_gate",
    "pair_visits",
    "parse_diagram",
    "parse_graph",
    "principal_submatrix",
    "random_diagram",
    "random_star_graph",
    "rank",
    "reverse_segment_transform",
    "rotating_matchings",
    "rp2_embeddable",
    "rp2_separation",
    "separation_surgery_check",
    "slot_relation",
    "spectrum_of_diagram",
    "splitting_matchings",
    "surgery_circle_count",
    "trace_atom",
    "twisted_angles",
    "two_vertex_graphs",
]
