"""Fast decisions for genus one and two without sweeping all partitions.

Both targets force strong structure on the two sides: a side of rank at
most one must look like an outer product of its negativity vector, so
its negative chords are pairwise linked and its positive chords are
linked to nothing on their side. Those are per-pair constraints, so a
partition achieving rank (1, 0) or (1, 1) can be found by constraint
propagation over chord pairs in quadratic time. Genus two split as
(2, 0) reduces to the (1, <=1) search on the diagram obtained by
reversing the segment of one negative chord, with a few forced side
pins carried over from the original diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .chords import (
    NEGATIVE,
    TRIAD,
    ChordDiagram,
    _reverse_segment_with_map,
    intersection_matrix,
    linked,
)
from .genus import (
    B,
    W,
    Orientability,
    derive_diagrams,
    is_permissible,
    orientability_gate,
)
from .star_graph import StarGraph


class PairVisitCounter:
    """Counts chord-pair inspections, for complexity instrumentation."""

    def __init__(self) -> None:
        self.count = 0

    def reset(self) -> None:
        self.count = 0

    def add(self, n: int = 1) -> None:
        self.count += n


pair_visits = PairVisitCounter()


@dataclass(frozen=True)
class SeparationWitness:
    """A concrete permissible partition together with its side ranks."""

    sides: tuple[str, ...]
    rank_w: int
    rank_b: int


@dataclass(frozen=True)
class DecisionReport:
    """Graph-level outcome of a fast embeddability check."""

    answer: bool
    method: str
    witness: SeparationWitness | None = None


SAME = 0
DIFFERENT = 1


def _constraint_edges(
    diagram: ChordDiagram, split_unlinked_negatives: bool
) -> list[list[tuple[int, int]]]:
    """Adjacency with parity: 0 forces same side, 1 forces opposite sides.

    Any linked pair with a positive member must split (a rank-<=1 side
    cannot hold it). When both sides must have rank at most one, two
    unlinked negative chords must split as well. Triad siblings stay
    together, double-chord siblings split.
    """
    chords = diagram.chords
    n = len(chords)
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]

    def add(i: int, j: int, par: int) -> None:
        adjacency[i].append((j, par))
        adjacency[j].append((i, par))

    for i in range(n):
        for j in range(i + 1, n):
            pair_visits.add()
            crossing = linked(chords[i], chords[j])
            both_negative = chords[i].sign == NEGATIVE and chords[j].sign == NEGATIVE
            if crossing and not both_negative:
                add(i, j, DIFFERENT)
            elif split_unlinked_negatives and not crossing and both_negative:
                add(i, j, DIFFERENT)

    partner: dict = {}
    for i, chord in enumerate(chords):
        other = partner.get(chord.group)
        if other is not None:
            add(other, i, SAME if chord.group[0] == TRIAD else DIFFERENT)
        else:
            partner[chord.group] = i
    return adjacency


def _two_color(
    adjacency: list[list[tuple[int, int]]]
) -> tuple[list[int], list[int], bool] :
    """BFS two-coloring per component; fails when constraints conflict.

    Returns (component id per chord, color per chord relative to its
    component root, consistent flag).
    """
    n = len(adjacency)
    comp = [-1] * n
    color = [0] * n
    consistent = True
    for start in range(n):
        if comp[start] != -1:
            continue
        comp[start] = start
        queue = [start]
        while queue:
            x = queue.pop()
            for y, par in adjacency[x]:
                want = color[x] ^ par
                if comp[y] == -1:
                    comp[y] = start
                    color[y] = want
                    queue.append(y)
                elif color[y] != want:
                    consistent = False
    return comp, color, consistent


def _verify(
    diagram: ChordDiagram, sides: Sequence[str]
) -> tuple[int, int]:
    matrix = intersection_matrix(diagram)
    w_idx = [i for i, s in enumerate(sides) if s == W]
    b_idx = [i for i, s in enumerate(sides) if s == B]
    return (
        matrix.principal_submatrix(w_idx).rank(),
        matrix.principal_submatrix(b_idx).rank(),
    )


def rp2_separation(dprime: ChordDiagram) -> SeparationWitness | None:
    """Find a permissible partition with rank sum exactly one, if any.

    Every negative chord is seeded to W, constraints are propagated, the
    remaining untouched components default to W (their placement cannot
    matter), and the result is accepted only if the ranks verify.
    """
    chords = dprime.chords
    n = len(chords)
    negatives = [i for i, c in enumerate(chords) if c.sign == NEGATIVE]
    if not negatives:
        return None
    adjacency = _constraint_edges(dprime, split_unlinked_negatives=False)
    comp, color, _ = _two_color(adjacency)
    flip: dict[int, int] = {}
    for i in negatives:
        flip.setdefault(comp[i], color[i])  # orient so this negative lands on W
    sides = tuple(
        W if color[i] ^ flip.get(comp[i], 0) == 0 else B for i in range(n)
    )
    if not is_permissible(dprime, sides):
        return None
    rank_w, rank_b = _verify(dprime, sides)
    if rank_w + rank_b != 1:
        return None
    return SeparationWitness(sides, rank_w, rank_b)


def _coverage_flips(
    negatives_by_comp: dict[int, tuple[int, int]],
    pinned: dict[int, int],
) -> Iterator[dict[int, int]]:
    """Candidate flip assignments for the unpinned components.

    The all-default assignment plus every single reorientation of one
    negative-bearing free component. A component either spreads its
    negatives over both colors (then any flip covers both sides) or
    holds them on one color, in which case moving a single component is
    the only way to change which sides receive negatives; trying each
    one is exhaustive.
    """
    free = [c for c in negatives_by_comp if c not in pinned]
    yield dict(pinned)
    for c in free:
        for orientation in (0, 1):
            choice = dict(pinned)
            choice[c] = orientation
            yield choice


def _assemble(
    n: int, comp: list[int], color: list[int], flips: dict[int, int]
) -> tuple[str, ...]:
    return tuple(
        W if color[i] ^ flips.get(comp[i], 0) == 0 else B for i in range(n)
    )


def klein_case_mobius(dprime: ChordDiagram) -> SeparationWitness | None:
    """Find a permissible partition with rank one on each side, if any.

    Both sides need the rank-one structure, so all pair constraints are
    hard; components are forced up to a flip and the only remaining
    freedom is choosing flips so each side receives a negative chord.
    """
    chords = dprime.chords
    n = len(chords)
    negatives = [i for i, c in enumerate(chords) if c.sign == NEGATIVE]
    if len(negatives) < 2:
        return None
    adjacency = _constraint_edges(dprime, split_unlinked_negatives=True)
    comp, color, consistent = _two_color(adjacency)
    if not consistent:
        return None

    negatives_by_comp: dict[int, tuple[int, int]] = {}
    for i in negatives:
        on0, on1 = negatives_by_comp.get(comp[i], (0, 0))
        if color[i] == 0:
            negatives_by_comp[comp[i]] = (on0 + 1, on1)
        else:
            negatives_by_comp[comp[i]] = (on0, on1 + 1)

    for flips in _coverage_flips(negatives_by_comp, {}):
        on_w = sum(
            counts[flips.get(c, 0)] for c, counts in negatives_by_comp.items()
        )
        on_b = sum(
            counts[1 - flips.get(c, 0)] for c, counts in negatives_by_comp.items()
        )
        if on_w == 0 or on_b == 0:
            continue
        sides = _assemble(n, comp, color, flips)
        if not is_permissible(dprime, sides):
            continue
        rank_w, rank_b = _verify(dprime, sides)
        if rank_w == 1 and rank_b == 1:
            return SeparationWitness(sides, rank_w, rank_b)
    return None


def klein_case_disc(
    dprime: ChordDiagram, all_choices: bool = True
) -> SeparationWitness | None:
    """Find a permissible partition with ranks (2, 0), via segment reversal.

    For a negative chord c, partitions of the original diagram putting
    every negative chord (c included) on a rank-2 W side and keeping B
    at rank 0 correspond exactly to partitions of the reversed diagram
    with rank 1 beside rank at most 1, where the surviving original
    negatives stay on the rank-1 side and a group sibling of c is pinned
    by its kind (triad beside c, double opposite). With `all_choices`
    every negative chord is tried; otherwise only the first, which is
    already decisive because a (2, 0) partition holds every negative.
    """
    chords = dprime.chords
    negatives = [i for i, c in enumerate(chords) if c.sign == NEGATIVE]
    if not negatives:
        return None
    if not all_choices:
        negatives = negatives[:1]

    for c_index in negatives:
        pivot = chords[c_index]
        reduced, index_map = _reverse_segment_with_map(dprime, c_index)
        m = len(reduced.chords)

        pins: dict[int, str] = {}
        for old, chord in enumerate(chords):
            if old == c_index:
                continue
            if chord.sign == NEGATIVE:
                pins[index_map[old]] = W
            if chord.group == pivot.group:
                pins[index_map[old]] = W if pivot.group[0] == TRIAD else B

        adjacency = _constraint_edges(reduced, split_unlinked_negatives=True)
        comp, color, consistent = _two_color(adjacency)
        if not consistent:
            continue

        comp_flips: dict[int, int] = {}
        pin_conflict = False
        for idx, side in pins.items():
            want = color[idx] ^ (0 if side == W else 1)
            held = comp_flips.setdefault(comp[idx], want)
            if held != want:
                pin_conflict = True
                break
        if pin_conflict:
            continue

        reduced_negatives = [i for i, ch in enumerate(reduced.chords) if ch.sign == NEGATIVE]
        if not reduced_negatives:
            continue
        negatives_by_comp: dict[int, tuple[int, int]] = {}
        for i in reduced_negatives:
            on0, on1 = negatives_by_comp.get(comp[i], (0, 0))
            if color[i] == 0:
                negatives_by_comp[comp[i]] = (on0 + 1, on1)
            else:
                negatives_by_comp[comp[i]] = (on0, on1 + 1)

        found = None
        for flips in _coverage_flips(negatives_by_comp, comp_flips):
            on_w = sum(
                counts[flips.get(c, 0)] for c, counts in negatives_by_comp.items()
            )
            if on_w == 0:
                continue
            reduced_sides = _assemble(m, comp, color, flips)
            if any(reduced_sides[idx] != side for idx, side in pins.items()):
                continue
            if not is_permissible(reduced, reduced_sides):
                continue
            rank_1, rank_2 = _verify(reduced, reduced_sides)
            if rank_1 == 1 and rank_2 <= 1:
                found = reduced_sides
                break
        if found is None:
            continue

        lifted = [""] * len(chords)
        lifted[c_index] = W
        for old in range(len(chords)):
            if old != c_index:
                lifted[old] = found[index_map[old]]
        sides = tuple(lifted)
        if not is_permissible(dprime, sides):
            continue
        rank_w, rank_b = _verify(dprime, sides)
        if rank_w == 2 and rank_b == 0:
            return SeparationWitness(sides, rank_w, rank_b)
    return None


def klein_separation(
    dprime: ChordDiagram, all_choices: bool = True
) -> tuple[SeparationWitness, str] | None:
    """Find a rank-sum-two partition as either a (1, 1) or a (2, 0) split."""
    witness = klein_case_mobius(dprime)
    if witness is not None:
        return witness, "mobius"
    witness = klein_case_disc(dprime, all_choices=all_choices)
    if witness is not None:
        return witness, "disc"
    return None


def rp2_embeddable(graph: StarGraph, seed: int | None = None) -> DecisionReport:
    """Decide checkerboard embeddability into the projective plane."""
    derived = derive_diagrams(graph, seed=seed)
    if orientability_gate(derived.expanded) is Orientability.ORIENTABLE:
        return DecisionReport(False, "orientable-gate")
    witness = rp2_separation(derived.expanded)
    if witness is None:
        return DecisionReport(False, "no-separation")
    return DecisionReport(True, "separation", witness)


def klein_embeddable(graph: StarGraph, seed: int | None = None) -> DecisionReport:
    """Decide checkerboard embeddability into the Klein bottle."""
    derived = derive_diagrams(graph, seed=seed)
    if orientability_gate(derived.expanded) is Orientability.ORIENTABLE:
        return DecisionReport(False, "orientable-gate")
    result = klein_separation(derived.expanded)
    if result is None:
        return DecisionReport(False, "no-separation")
    witness, method = result
    return DecisionReport(True, method, witness)
