"""Orientability gate, permissible partitions, and the genus spectrum."""

import pytest

from crosscap import (
    B,
    ChordDiagram,
    NEGATIVE,
    Orientability,
    POSITIVE,
    W,
    derive_diagrams,
    genus_of_partition,
    genus_spectrum,
    intersection_matrix,
    is_genus_achievable,
    is_permissible,
    iter_permissible_partitions,
    orientability_gate,
    spectrum_of_diagram,
)
from test_chords import free_diagram


class TestOrientabilityGate:
    def test_all_positive_is_orientable(self):
        d = free_diagram(4, [(0, 2, POSITIVE), (1, 3, POSITIVE)])
        assert orientability_gate(d) is Orientability.ORIENTABLE

    def test_empty_diagram_is_orientable(self):
        assert orientability_gate(ChordDiagram(0, ())) is Orientability.ORIENTABLE

    def test_any_negative_chord_is_nonorientable(self, g1, g3):
        for graph in (g1, g3):
            dprime = derive_diagrams(graph).expanded
            assert orientability_gate(dprime) is Orientability.NONORIENTABLE


class TestPermissibility:
    def test_triad_pair_stays_together(self, g3):
        dprime = derive_diagrams(g3).expanded
        assert is_permissible(dprime, (W, W))
        assert is_permissible(dprime, (B, B))
        assert not is_permissible(dprime, (W, B))

    def test_double_pair_splits(self, g4):
        dprime = derive_diagrams(g4).expanded
        assert is_permissible(dprime, (W, B))
        assert is_permissible(dprime, (B, W))
        assert not is_permissible(dprime, (W, W))
        assert not is_permissible(dprime, (B, B))

    def test_free_chords_unconstrained(self, g1):
        dprime = derive_diagrams(g1).expanded
        assert is_permissible(dprime, (W,))
        assert is_permissible(dprime, (B,))

    def test_shape_and_alphabet_checked(self, g1):
        dprime = derive_diagrams(g1).expanded
        assert not is_permissible(dprime, ())
        assert not is_permissible(dprime, ("X",))


class TestPartitionEnumeration:
    def test_canonical_drops_mirror(self, g1):
        dprime = derive_diagrams(g1).expanded
        assert list(iter_permissible_partitions(dprime)) == [(W,)]
        assert list(iter_permissible_partitions(dprime, canonical=False)) == [
            (W,),
            (B,),
        ]

    def test_triad_choices(self, g3):
        dprime = derive_diagrams(g3).expanded
        assert set(iter_permissible_partitions(dprime, canonical=False)) == {
            (W, W),
            (B, B),
        }

    def test_double_choices(self, g4):
        dprime = derive_diagrams(g4).expanded
        assert set(iter_permissible_partitions(dprime, canonical=False)) == {
            (W, B),
            (B, W),
        }

    def test_empty_diagram_has_one_partition(self):
        assert list(iter_permissible_partitions(ChordDiagram(0, ()))) == [()]

    def test_every_yield_is_permissible(self, g3, g4):
        for graph in (g3, g4):
            dprime = derive_diagrams(graph).expanded
            for sides in iter_permissible_partitions(dprime, canonical=False):
                assert is_permissible(dprime, sides)


class TestGenusOfPartition:
    def test_single_negative_chord(self, g1):
        dprime = derive_diagrams(g1).expanded
        assert genus_of_partition(dprime, (W,)) == 1
        assert genus_of_partition(dprime, (B,)) == 1

    def test_triad_on_one_side(self, g3):
        dprime = derive_diagrams(g3).expanded
        assert genus_of_partition(dprime, (W, W)) == 2
        assert genus_of_partition(dprime, (B, B)) == 2

    def test_empty_partition(self):
        assert genus_of_partition(ChordDiagram(0, ()), ()) == 0

    def test_impermissible_partition_rejected(self, g3):
        dprime = derive_diagrams(g3).expanded
        with pytest.raises(ValueError):
            genus_of_partition(dprime, (W, B))

    def test_mirror_partitions_agree(self):
        d = free_diagram(
            6, [(0, 3, NEGATIVE), (1, 4, POSITIVE), (2, 5, NEGATIVE)]
        )
        for sides in iter_permissible_partitions(d, canonical=False):
            mirror = tuple(B if s == W else W for s in sides)
            assert genus_of_partition(d, sides) == genus_of_partition(d, mirror)


class TestSpectrum:
    def test_single_crosscap(self, g1):
        dprime = derive_diagrams(g1).expanded
        assert spectrum_of_diagram(dprime) == {1: (W,)}

    def test_double_crosscap(self, g3):
        dprime = derive_diagrams(g3).expanded
        assert spectrum_of_diagram(dprime) == {2: (W, W)}

    def test_report_fields(self, g1):
        report = genus_spectrum(g1)
        assert report.orientability is Orientability.NONORIENTABLE
        assert report.spectrum == (1,)
        assert report.witness_for(1) == (W,)
        assert report.witness_for(2) is None

    def test_orientable_graphs_get_empty_spectrum(self, g2, g4):
        for graph in (g2, g4):
            report = genus_spectrum(graph)
            assert report.orientability is Orientability.ORIENTABLE
            assert report.spectrum == ()
            assert report.witnesses == ()

    def test_achievability_matches_spectrum(self, g1, g2, g3):
        assert is_genus_achievable(g1, 1)
        assert not is_genus_achievable(g1, 2)
        assert is_genus_achievable(g3, 2)
        assert not is_genus_achievable(g3, 1)
        assert not is_genus_achievable(g2, 0)
        assert not is_genus_achievable(g2, 1)

    def test_witness_reaches_its_genus(self, g1, g3):
        for graph in (g1, g3):
            report = genus_spectrum(graph)
            dprime = derive_diagrams(graph).expanded
            for genus, sides in report.witnesses:
                assert genus_of_partition(dprime, sides) == genus

    def test_seeded_derivation_same_spectrum(self, g3):
        base = genus_spectrum(g3).spectrum
        for seed in range(8):
            assert genus_spectrum(g3, seed=seed).spectrum == base


class TestDerivedDiagrams:
    def test_matrix_property(self, g3):
        derived = derive_diagrams(g3)
        assert (
            derived.matrix.to_dense()
            == intersection_matrix(derived.expanded).to_dense()
        )

    def test_pipeline_pieces_are_consistent(self, g4):
        derived = derive_diagrams(g4)
        assert derived.graph == g4
        assert derived.circuit.validate_circuit() == []
        assert derived.star_diagram.validate() == []
        assert derived.expanded.validate(require_full=True) == []
