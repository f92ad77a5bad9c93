"""Genus spectrum of checkerboard-trivial embeddings via GF(2) rank sums.

Splitting the expanded chord diagram into two sides W and B, subject to
the group rules (triad siblings together, double-chord siblings apart),
models the two cell families of a checkerboard embedding. The sum of
the GF(2) ranks of the two induced intersection submatrices is the
nonorientable genus of the surface the embedding fills; sweeping all
permissible splits yields every achievable genus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Hashable, Iterator, Sequence

from .chords import (
    DOUBLE,
    NEGATIVE,
    ChordDiagram,
    StarChordDiagram,
    build_star_chord_diagram,
    expand,
    intersection_matrix,
)
from .circuits import RotatingSplittingCircuit, build_rotating_splitting_circuit
from .gf2 import Gf2Matrix
from .star_graph import StarGraph

W = "W"
B = "B"


class Orientability(Enum):
    ORIENTABLE = "orientable"
    NONORIENTABLE = "nonorientable"


@dataclass(frozen=True)
class DerivedDiagrams:
    """The full pipeline from a graph to its expanded chord diagram."""

    graph: StarGraph
    circuit: RotatingSplittingCircuit
    star_diagram: StarChordDiagram
    expanded: ChordDiagram

    @property
    def matrix(self) -> Gf2Matrix:
        return intersection_matrix(self.expanded)


def derive_diagrams(graph: StarGraph, seed: int | None = None) -> DerivedDiagrams:
    """Build circuit, star chord diagram, and expansion for a graph."""
    circuit = build_rotating_splitting_circuit(graph, seed=seed)
    star = build_star_chord_diagram(graph, circuit)
    return DerivedDiagrams(graph, circuit, star, expand(star))


def orientability_gate(dprime: ChordDiagram) -> Orientability:
    """Nonorientable as soon as any chord is negative, else orientable.

    Only nonorientable diagrams admit the checkerboard embeddings this
    package decides; an all-positive diagram is reported as orientable
    and the genus machinery declines it.
    """
    if any(c.sign == NEGATIVE for c in dprime.chords):
        return Orientability.NONORIENTABLE
    return Orientability.ORIENTABLE


def is_permissible(dprime: ChordDiagram, sides: Sequence[str]) -> bool:
    """Check the group rules: triad siblings together, double siblings apart."""
    if len(sides) != len(dprime.chords):
        return False
    if any(s not in (W, B) for s in sides):
        return False
    for group, members in dprime.groups():
        if len(members) == 2:
            i, j = members
            same = sides[i] == sides[j]
            if group[0] == DOUBLE and same:
                return False
            if group[0] != DOUBLE and not same:
                return False
    return True


def genus_of_partition(dprime: ChordDiagram, sides: Sequence[str]) -> int:
    """Rank of the W side plus rank of the B side of the intersection matrix.

    Raises:
        ValueError: if `sides` breaks a group rule or has the wrong shape.
    """
    if not is_permissible(dprime, sides):
        raise ValueError("partition violates the group rules")
    matrix = intersection_matrix(dprime)
    w_idx = [i for i, s in enumerate(sides) if s == W]
    b_idx = [i for i, s in enumerate(sides) if s == B]
    return matrix.principal_submatrix(w_idx).rank() + matrix.principal_submatrix(b_idx).rank()


def iter_permissible_partitions(
    dprime: ChordDiagram, canonical: bool = True
) -> Iterator[tuple[str, ...]]:
    """All permissible side assignments, in a fixed lexicographic order.

    Choices are made group by group (groups ordered by first chord
    index). With `canonical` set, the first group is pinned to its first
    choice, which drops the global W/B mirror image of every partition.
    """
    groups = dprime.groups()
    n = len(dprime.chords)
    if not groups:
        yield ()
        return
    per_group_choices: list[tuple[tuple[str, ...], tuple[str, ...]]] = []
    for group, members in groups:
        if group[0] == DOUBLE:
            per_group_choices.append(((W, B), (B, W)))
        else:
            width = len(members)
            per_group_choices.append(((W,) * width, (B,) * width))
    spaces = [
        choices[:1] if canonical and k == 0 else choices
        for k, choices in enumerate(per_group_choices)
    ]
    for combo in itertools.product(*spaces):
        sides = [""] * n
        for (group, members), choice in zip(groups, combo):
            for i, side in zip(members, choice):
                sides[i] = side
        yield tuple(sides)


def spectrum_of_diagram(dprime: ChordDiagram) -> dict[int, tuple[str, ...]]:
    """Achievable rank sums of a diagram, each with its first witness.

    Partitions are visited in the order of `iter_permissible_partitions`,
    so the stored witness per genus is the lexicographically least one
    in that enumeration.
    """
    matrix = intersection_matrix(dprime)
    witnesses: dict[int, tuple[str, ...]] = {}
    for sides in iter_permissible_partitions(dprime, canonical=True):
        w_idx = [i for i, s in enumerate(sides) if s == W]
        b_idx = [i for i, s in enumerate(sides) if s == B]
        genus = matrix.principal_submatrix(w_idx).rank() + matrix.principal_submatrix(b_idx).rank()
        if genus not in witnesses:
            witnesses[genus] = sides
    return witnesses


@dataclass(frozen=True)
class GenusReport:
    """Spectrum of achievable nonorientable genera with one witness each."""

    orientability: Orientability
    spectrum: tuple[int, ...]
    witnesses: tuple[tuple[int, tuple[str, ...]], ...]

    def witness_for(self, genus: int) -> tuple[str, ...] | None:
        for g, sides in self.witnesses:
            if g == genus:
                return sides
        return None


def genus_spectrum(graph: StarGraph, seed: int | None = None) -> GenusReport:
    """Every genus achievable by a checkerboard-trivial embedding of `graph`.

    An orientable-gate graph is reported with an empty spectrum rather
    than raised, so callers can distinguish "no nonorientable embedding
    model applies" from "no genus achieved".
    """
    derived = derive_diagrams(graph, seed=seed)
    if orientability_gate(derived.expanded) is Orientability.ORIENTABLE:
        return GenusReport(Orientability.ORIENTABLE, (), ())
    witnesses = spectrum_of_diagram(derived.expanded)
    spectrum = tuple(sorted(witnesses))
    return GenusReport(
        Orientability.NONORIENTABLE,
        spectrum,
        tuple((g, witnesses[g]) for g in spectrum),
    )


def is_genus_achievable(graph: StarGraph, genus: int, seed: int | None = None) -> bool:
    """True when some permissible partition reaches exactly this genus."""
    report = genus_spectrum(graph, seed=seed)
    return genus in report.spectrum
