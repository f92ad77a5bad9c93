"""Fast projective-plane and Klein-bottle decisions with witness checking."""

import random

from crosscap import (
    B,
    NEGATIVE,
    POSITIVE,
    W,
    derive_diagrams,
    genus_of_partition,
    intersection_matrix,
    is_genus_achievable,
    is_permissible,
    klein_case_disc,
    klein_case_mobius,
    klein_embeddable,
    klein_separation,
    pair_visits,
    random_star_graph,
    rp2_embeddable,
    rp2_separation,
)
from test_chords import free_diagram


def side_ranks(dprime, sides):
    matrix = intersection_matrix(dprime)
    w_idx = [i for i, s in enumerate(sides) if s == W]
    b_idx = [i for i, s in enumerate(sides) if s == B]
    return (
        matrix.principal_submatrix(w_idx).rank(),
        matrix.principal_submatrix(b_idx).rank(),
    )


def assert_witness_sound(dprime, witness, total):
    assert is_permissible(dprime, witness.sides)
    assert (witness.rank_w, witness.rank_b) == side_ranks(dprime, witness.sides)
    assert witness.rank_w + witness.rank_b == total
    assert genus_of_partition(dprime, witness.sides) == total


class TestRp2Separation:
    def test_single_negative_chord(self, g1):
        dprime = derive_diagrams(g1).expanded
        witness = rp2_separation(dprime)
        assert witness is not None
        assert sorted((witness.rank_w, witness.rank_b)) == [0, 1]
        assert_witness_sound(dprime, witness, 1)

    def test_triad_needs_two_crosscaps(self, g3):
        assert rp2_separation(derive_diagrams(g3).expanded) is None

    def test_two_linked_negatives_share_a_side(self):
        d = free_diagram(4, [(0, 2, NEGATIVE), (1, 3, NEGATIVE)])
        witness = rp2_separation(d)
        assert witness is not None
        assert_witness_sound(d, witness, 1)

    def test_positive_only_diagram_fails(self):
        d = free_diagram(4, [(0, 2, POSITIVE), (1, 3, POSITIVE)])
        assert rp2_separation(d) is None


class TestKleinMobiusCase:
    def test_two_unlinked_negatives_split(self):
        d = free_diagram(4, [(0, 1, NEGATIVE), (2, 3, NEGATIVE)])
        witness = klein_case_mobius(d)
        assert witness is not None
        assert (witness.rank_w, witness.rank_b) == (1, 1)
        assert_witness_sound(d, witness, 2)

    def test_triad_cannot_split(self, g3):
        assert klein_case_mobius(derive_diagrams(g3).expanded) is None

    def test_single_negative_fails(self):
        d = free_diagram(2, [(0, 1, NEGATIVE)])
        assert klein_case_mobius(d) is None


class TestKleinDiscCase:
    def test_single_negative_fails(self):
        d = free_diagram(2, [(0, 1, NEGATIVE)])
        assert klein_case_disc(d) is None

    def test_negative_with_interlinked_positives(self):
        d = free_diagram(
            6, [(0, 3, NEGATIVE), (1, 4, POSITIVE), (2, 5, POSITIVE)]
        )
        witness = klein_case_disc(d)
        assert witness is not None
        assert sorted((witness.rank_w, witness.rank_b)) == [0, 2]
        assert_witness_sound(d, witness, 2)

    def test_triad_diagram_succeeds(self, g3):
        dprime = derive_diagrams(g3).expanded
        witness = klein_case_disc(dprime)
        assert witness is not None
        assert sorted((witness.rank_w, witness.rank_b)) == [0, 2]
        assert_witness_sound(dprime, witness, 2)


class TestKleinSeparation:
    def test_mobius_route_reported(self):
        d = free_diagram(4, [(0, 1, NEGATIVE), (2, 3, NEGATIVE)])
        result = klein_separation(d)
        assert result is not None
        witness, method = result
        assert method == "mobius"
        assert_witness_sound(d, witness, 2)

    def test_disc_route_reported(self, g3):
        dprime = derive_diagrams(g3).expanded
        result = klein_separation(dprime)
        assert result is not None
        witness, method = result
        assert method == "disc"
        assert_witness_sound(dprime, witness, 2)

    def test_no_route_for_single_negative(self):
        d = free_diagram(2, [(0, 1, NEGATIVE)])
        assert klein_separation(d) is None


class TestGraphLevelDecisions:
    def test_projective_plane_answers(self, g1, g2, g3, g4):
        assert rp2_embeddable(g1).answer
        assert rp2_embeddable(g1).method == "separation"
        assert not rp2_embeddable(g3).answer
        assert rp2_embeddable(g3).method == "no-separation"
        for graph in (g2, g4):
            report = rp2_embeddable(graph)
            assert not report.answer
            assert report.method == "orientable-gate"

    def test_klein_bottle_answers(self, g1, g2, g3, g4):
        assert klein_embeddable(g3).answer
        assert klein_embeddable(g3).method == "disc"
        assert not klein_embeddable(g1).answer
        assert klein_embeddable(g1).method == "no-separation"
        for graph in (g2, g4):
            report = klein_embeddable(graph)
            assert not report.answer
            assert report.method == "orientable-gate"

    def test_witnesses_attached_on_success(self, g1, g3):
        rp2 = rp2_embeddable(g1)
        assert rp2.witness is not None
        assert_witness_sound(derive_diagrams(g1).expanded, rp2.witness, 1)
        klein = klein_embeddable(g3)
        assert klein.witness is not None
        assert_witness_sound(derive_diagrams(g3).expanded, klein.witness, 2)

    def test_seed_does_not_change_answers(self, g1, g3):
        for seed in range(6):
            assert rp2_embeddable(g1, seed=seed).answer
            assert klein_embeddable(g3, seed=seed).answer
            assert not rp2_embeddable(g3, seed=seed).answer
            assert not klein_embeddable(g1, seed=seed).answer

    def test_agreement_with_spectrum_on_random_graphs(self):
        rng = random.Random(99)
        for _ in range(60):
            graph = random_star_graph(rng, max_vertices=4)
            assert rp2_embeddable(graph).answer == is_genus_achievable(graph, 1)
            assert klein_embeddable(graph).answer == is_genus_achievable(graph, 2)


class TestPairVisitCounter:
    def test_counts_pair_inspections(self):
        d = free_diagram(8, [(0, 4, NEGATIVE), (1, 5, NEGATIVE), (2, 6, NEGATIVE), (3, 7, NEGATIVE)])
        pair_visits.reset()
        rp2_separation(d)
        first = pair_visits.count
        assert first >= 6
        pair_visits.reset()
        assert pair_visits.count == 0
        klein_case_mobius(d)
        assert pair_visits.count >= 6
