"""Slot relations, graph validation, and rotation reversal."""

import pytest

from crosscap import AngleRelation, HalfEdge, StarGraph, slot_relation
from conftest import loops_graph


class TestSlotRelation:
    def test_wraparound_is_adjacent(self):
        assert slot_relation(4, 0, 3) is AngleRelation.ADJACENT

    def test_opposite_at_degree_four(self):
        assert slot_relation(4, 1, 3) is AngleRelation.OPPOSITE

    def test_distance_two_is_neither(self):
        assert slot_relation(6, 0, 2) is AngleRelation.NEITHER

    def test_opposite_at_degree_six(self):
        assert slot_relation(6, 2, 5) is AngleRelation.OPPOSITE

    def test_symmetric_in_both_slots(self):
        for degree in (4, 6):
            for a in range(degree):
                for b in range(degree):
                    if a != b:
                        assert slot_relation(degree, a, b) is slot_relation(
                            degree, b, a
                        )

    def test_neither_only_at_degree_six(self):
        relations = {
            slot_relation(4, a, b) for a in range(4) for b in range(4) if a != b
        }
        assert AngleRelation.NEITHER not in relations

    def test_equal_slots_rejected(self):
        with pytest.raises(ValueError):
            slot_relation(4, 2, 2)

    def test_bad_degree_rejected(self):
        with pytest.raises(ValueError):
            slot_relation(5, 0, 1)

    def test_slot_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            slot_relation(4, 0, 4)


class TestValidate:
    def test_hand_checked_graph_is_valid(self, g1):
        assert g1.validate() == []

    def test_unmatched_slots_reported(self):
        graph = StarGraph.build({"v0": 4}, [(("v0", 0), ("v0", 1))])
        problems = graph.validate()
        assert any("slot=2" in p for p in problems)
        assert any("slot=3" in p for p in problems)

    def test_degree_five_rejected(self):
        graph = StarGraph.build({"v0": 5}, [])
        assert any("degree 5" in p for p in problems_of(graph))

    def test_unknown_vertex_reported(self):
        graph = StarGraph.build({"v0": 4}, [(("v0", 0), ("v1", 0))])
        assert any("unknown vertex" in p for p in problems_of(graph))

    def test_slot_out_of_range_reported(self):
        graph = StarGraph.build({"v0": 4}, [(("v0", 0), ("v0", 7))])
        assert any("out of range" in p for p in problems_of(graph))

    def test_half_edge_reuse_reported(self):
        graph = StarGraph.build(
            {"v0": 4}, [(("v0", 0), ("v0", 1)), (("v0", 0), ("v0", 2))]
        )
        assert any("used by 2 edges" in p for p in problems_of(graph))

    def test_self_paired_half_edge_reported(self):
        graph = StarGraph.build({"v0": 4}, [(("v0", 0), ("v0", 0))])
        assert any("to itself" in p for p in problems_of(graph))

    def test_duplicate_vertex_reported(self):
        graph = StarGraph((("v0", 4), ("v0", 4)), ())
        assert any("more than once" in p for p in problems_of(graph))


def problems_of(graph):
    return graph.validate()


class TestStructure:
    def test_half_edges_in_canonical_order(self, g1):
        assert list(g1.half_edges()) == [HalfEdge("v0", s) for s in range(4)]

    def test_edges_canonicalized(self):
        graph = StarGraph.build({"v0": 4}, [(("v0", 2), ("v0", 0)), (("v0", 3), ("v0", 1))])
        assert graph.edges == (
            (HalfEdge("v0", 0), HalfEdge("v0", 2)),
            (HalfEdge("v0", 1), HalfEdge("v0", 3)),
        )

    def test_edge_partner_map_is_involutive(self, g3):
        partner = g3.edge_partner_map
        assert len(partner) == 6
        for h, other in partner.items():
            assert partner[other] == h

    def test_build_accepts_pair_iterable(self, g1):
        same = StarGraph.build([("v0", 4)], [(("v0", 0), ("v0", 2)), (("v0", 1), ("v0", 3))])
        assert same == g1

    def test_degree_lookup(self, g3):
        assert g3.degree_of("v0") == 6
        assert g3.vertex_index("v0") == 0


class TestConnectivity:
    def test_single_vertex_connected(self, g1):
        assert g1.is_connected()

    def test_two_components_not_connected(self):
        graph = StarGraph.build(
            {"a": 4, "b": 4},
            [
                (("a", 0), ("a", 1)),
                (("a", 2), ("a", 3)),
                (("b", 0), ("b", 1)),
                (("b", 2), ("b", 3)),
            ],
        )
        assert graph.validate() == []
        assert not graph.is_connected()

    def test_empty_graph_counts_as_connected(self):
        assert StarGraph((), ()).is_connected()


class TestReversal:
    def test_slot_map(self):
        graph = StarGraph.build(
            {"a": 4, "b": 4},
            [
                (("a", 0), ("b", 0)),
                (("a", 1), ("b", 1)),
                (("a", 2), ("b", 3)),
                (("a", 3), ("b", 2)),
            ],
        )
        flipped = graph.reverse_vertex_rotation("a")
        assert (HalfEdge("a", 3), HalfEdge("b", 0)) in flipped.edges
        assert (HalfEdge("a", 0), HalfEdge("b", 2)) in flipped.edges

    def test_double_reversal_is_identity(self, g3):
        assert g3.reverse_vertex_rotation("v0").reverse_vertex_rotation("v0") == g3

    def test_reversal_preserves_validity(self, g4):
        flipped = g4.reverse_vertex_rotation("v0")
        assert flipped.validate() == []
        assert flipped.degree_of("v0") == 6

    def test_loop_pairs_flip(self):
        graph = loops_graph(6, [(0, 1), (2, 4), (3, 5)])
        flipped = graph.reverse_vertex_rotation("v0")
        assert flipped == loops_graph(6, [(4, 5), (1, 3), (0, 2)])
