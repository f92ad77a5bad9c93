"""Text formats and the command-line interface."""

import random
from pathlib import Path

import pytest

from crosscap import (
    ParseError,
    StarGraph,
    derive_diagrams,
    format_diagram,
    format_graph,
    format_star_diagram,
    parse_diagram,
    parse_graph,
    random_diagram,
    random_star_graph,
)
from crosscap.cli import main

GOLDEN = Path(__file__).parent / "golden"


class TestParseGraph:
    def test_parses_vertices_and_edges(self, g1):
        text = "vertex v0 4\nedge v0.0 v0.2\nedge v0.1 v0.3\n"
        assert parse_graph(text) == g1

    def test_comments_and_blanks_ignored(self, g1):
        text = "# loops\n\nvertex v0 4  # one vertex\nedge v0.0 v0.2\nedge v0.1 v0.3\n"
        assert parse_graph(text) == g1

    def test_roundtrip_hand_checked(self, g1, g2, g3, g4):
        for graph in (g1, g2, g3, g4):
            assert parse_graph(format_graph(graph)) == graph

    def test_roundtrip_random(self):
        rng = random.Random(5)
        for _ in range(30):
            graph = random_star_graph(rng, max_vertices=5)
            assert parse_graph(format_graph(graph)) == graph

    def error_line(self, text):
        with pytest.raises(ParseError) as info:
            parse_graph(text)
        return info.value

    def test_unknown_directive_cites_line(self):
        err = self.error_line("vertex v0 4\nloop v0.0 v0.1\n")
        assert err.lineno == 2
        assert "unknown directive" in err.message

    def test_bad_degree_cites_line(self):
        err = self.error_line("vertex v0 5\n")
        assert err.lineno == 1
        assert "degree must be 4 or 6" in err.message

    def test_duplicate_vertex_cites_line(self):
        err = self.error_line("vertex a 4\nvertex a 4\n")
        assert err.lineno == 2
        assert "declared twice" in err.message

    def test_unknown_vertex_cites_line(self):
        err = self.error_line("vertex a 4\nedge a.0 b.0\n")
        assert err.lineno == 2
        assert "unknown vertex" in err.message

    def test_bad_endpoint_cites_line(self):
        err = self.error_line("vertex a 4\nedge a.0 a-1\n")
        assert err.lineno == 2
        assert "bad endpoint" in err.message

    def test_slot_out_of_range_cites_line(self):
        err = self.error_line("vertex a 4\nedge a.0 a.4\n")
        assert err.lineno == 2
        assert "out of range" in err.message

    def test_repeated_half_edge_cites_line(self):
        err = self.error_line(
            "vertex a 4\nedge a.0 a.1\nedge a.0 a.2\n"
        )
        assert err.lineno == 3
        assert "used twice" in err.message

    def test_self_paired_endpoint_cites_line(self):
        err = self.error_line("vertex a 4\nedge a.0 a.0\n")
        assert err.lineno == 2
        assert "must differ" in err.message

    def test_uncovered_slots_reported_without_line(self):
        err = self.error_line("vertex a 4\nedge a.0 a.1\n")
        assert err.lineno is None
        assert "not used" in err.message


class TestDiagramFormat:
    def test_roundtrip_random(self):
        rng = random.Random(17)
        for _ in range(30):
            diagram = random_diagram(rng, rng.randrange(0, 7))
            assert parse_diagram(format_diagram(diagram)) == diagram

    def test_roundtrip_derived(self, g3, g4):
        for graph in (g3, g4):
            dprime = derive_diagrams(graph).expanded
            assert parse_diagram(format_diagram(dprime)) == dprime

    def test_missing_header_rejected(self):
        with pytest.raises(ParseError) as info:
            parse_diagram("chord 0 1 - free:a\n")
        assert info.value.lineno == 1

    def test_bad_sign_rejected(self):
        with pytest.raises(ParseError) as info:
            parse_diagram("points 2\nchord 0 1 ? free:a\n")
        assert info.value.lineno == 2

    def test_bad_group_rejected(self):
        with pytest.raises(ParseError) as info:
            parse_diagram("points 2\nchord 0 1 - cluster:a\n")
        assert "bad group" in info.value.message

    def test_point_reuse_rejected(self):
        text = "points 4\nchord 0 2 - free:a\nchord 2 3 - free:b\n"
        with pytest.raises(ParseError):
            parse_diagram(text)

    def test_star_diagram_dump(self, g1, g3, g4):
        star1 = derive_diagrams(g1).star_diagram
        assert format_star_diagram(star1) == "points 2\nstar v0 chord 0 1 -\n"
        star3 = derive_diagrams(g3).star_diagram
        assert "triad 0 1 2 signs + - -" in format_star_diagram(star3)
        star4 = derive_diagrams(g4).star_diagram
        assert "double principal 1 outers 0 2 signs + +" in format_star_diagram(star4)


@pytest.fixture
def graph_file(tmp_path):
    def write(graph, name="graph.star"):
        path = tmp_path / name
        path.write_text(format_graph(graph))
        return str(path)

    return write


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCliCheck:
    def test_valid_graph(self, capsys, graph_file, g1):
        code, out, err = run_cli(capsys, "check", graph_file(g1))
        assert code == 0
        assert "ok: 1 vertices, 2 edges, connected" in out
        assert err == ""

    def test_bad_degree_cites_line(self, capsys, tmp_path):
        path = tmp_path / "bad.star"
        path.write_text("vertex v0 5\n")
        code, out, err = run_cli(capsys, "check", str(path))
        assert code == 2
        assert err.startswith("error: line 1:")
        assert "degree must be 4 or 6" in err

    def test_missing_file(self, capsys, tmp_path):
        code, out, err = run_cli(capsys, "check", str(tmp_path / "absent.star"))
        assert code == 2
        assert err.startswith("error: cannot read")

    def test_json_fields(self, capsys, graph_file, g3):
        import json

        code, out, err = run_cli(capsys, "check", graph_file(g3), "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "schema": 1,
            "command": "check",
            "valid": True,
            "vertices": 1,
            "edges": 3,
            "connected": True,
        }


class TestCliPipelineViews:
    def test_circuit_listing(self, capsys, graph_file, g1):
        code, out, err = run_cli(capsys, "circuit", graph_file(g1))
        assert code == 0
        assert out.splitlines() == [
            "passage v0.2->v0.3",
            "edge v0.3-v0.1",
            "passage v0.1->v0.0",
            "edge v0.0-v0.2",
        ]

    def test_diagram_listing(self, capsys, graph_file, g3):
        code, out, err = run_cli(capsys, "diagram", graph_file(g3))
        assert code == 0
        assert "star v0 triad 0 1 2 signs + - -" in out

    def test_expand_json(self, capsys, graph_file, g3):
        import json

        code, out, err = run_cli(capsys, "expand", graph_file(g3), "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["points"] == 4
        assert payload["chords"] == [
            {"a": 0, "b": 3, "sign": -1, "group": "triad:v0"},
            {"a": 1, "b": 2, "sign": -1, "group": "triad:v0"},
        ]


class TestCliDecisions:
    def test_genus_achievable(self, capsys, graph_file, g1):
        code, out, err = run_cli(capsys, "genus", "--g", "1", graph_file(g1))
        assert (code, out) == (0, "achievable\n")

    def test_genus_not_achievable(self, capsys, graph_file, g1):
        code, out, err = run_cli(capsys, "genus", "--g", "2", graph_file(g1))
        assert (code, out) == (1, "not achievable\n")

    def test_genus_gate_exit(self, capsys, graph_file, g2):
        code, out, err = run_cli(capsys, "genus", "--g", "1", graph_file(g2))
        assert code == 2
        assert err.startswith("error: orientable gate")

    def test_rp2_yes_and_no(self, capsys, graph_file, g1, g3):
        code, out, err = run_cli(capsys, "rp2", graph_file(g1))
        assert (code, out) == (0, "embeddable\n")
        code, out, err = run_cli(capsys, "rp2", graph_file(g3, "other.star"))
        assert (code, out) == (1, "not embeddable\n")

    def test_klein_yes_and_no(self, capsys, graph_file, g1, g3):
        code, out, err = run_cli(capsys, "klein", graph_file(g3))
        assert (code, out) == (0, "embeddable\n")
        code, out, err = run_cli(capsys, "klein", graph_file(g1, "other.star"))
        assert (code, out) == (1, "not embeddable\n")

    def test_spectrum_text(self, capsys, graph_file, g3):
        code, out, err = run_cli(capsys, "spectrum", graph_file(g3))
        assert code == 0
        assert out.splitlines() == [
            "gate: nonorientable",
            "spectrum: 2",
            "witness 2: WW",
        ]

    def test_oracle_verify_file(self, capsys, graph_file, g1):
        code, out, err = run_cli(capsys, "oracle-verify", graph_file(g1))
        assert code == 0
        assert "ok: 1 graphs checked, 0 mismatches" in out

    def test_oracle_verify_random_family(self, capsys, graph_file):
        code, out, err = run_cli(
            capsys, "oracle-verify", "--seed", "4", "--count", "6",
            "--max-vertices", "4",
        )
        assert code == 0
        assert "ok: 6 graphs checked, 0 mismatches" in out


class TestCliGolden:
    CASES = [
        ("g1", "spectrum_g1.json", 0),
        ("g3", "spectrum_g3.json", 0),
        ("g2", "spectrum_g2_gate.json", 2),
    ]

    def test_spectrum_outputs_byte_stable(self, capsys, graph_file, g1, g2, g3):
        graphs = {"g1": g1, "g2": g2, "g3": g3}
        for name, golden_name, expected_code in self.CASES:
            path = graph_file(graphs[name], f"{name}.star")
            golden = (GOLDEN / golden_name).read_text()
            first = run_cli(capsys, "spectrum", path, "--json")
            second = run_cli(capsys, "spectrum", path, "--json")
            assert first[0] == expected_code
            assert first[:2] == second[:2]
            assert first[1] == golden
