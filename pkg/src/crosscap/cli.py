"""Command-line surface tying the pipeline together.

Subcommands: check, circuit, diagram, expand, genus, spectrum, rp2,
klein, oracle-verify. Exit codes: 0 = yes/success, 1 = no (for decision
verbs and oracle mismatches), 2 = parse or gate errors, reported as a
one-line stderr diagnostic. `--json` switches stdout to a stable
structured schema (`schema: 1`); identical inputs and flags produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Sequence

from .chords import (
    DoubleChord,
    StarChord,
    Triad,
    build_star_chord_diagram,
    expand,
)
from .circuits import RotatingSplittingCircuit, build_rotating_splitting_circuit
from .fast_checks import DecisionReport, klein_embeddable, rp2_embeddable
from .formats import (
    ParseError,
    format_diagram,
    format_graph,
    format_star_diagram,
    parse_graph,
)
from .generate import random_star_graph
from .genus import Orientability, genus_spectrum
from .oracle import atom_spectrum
from .star_graph import HalfEdge, StarGraph

SCHEMA = 1

_GATE_DIAGNOSTIC = (
    "orientable gate: every expanded chord is positive, "
    "so no nonorientable checkerboard embedding exists"
)


class CommandError(Exception):
    """Exit-2 condition carrying a diagnostic and structured fields."""

    def __init__(
        self, diagnostic: str, error: str = "error", fields: dict | None = None
    ):
        super().__init__(diagnostic)
        self.error = error
        self.fields = fields or {}


def _load_graph(path: str) -> StarGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CommandError(
            f"cannot read {path}: {exc.strerror or exc}", error="io"
        ) from None
    return parse_graph(text)


def _build_circuit(args) -> tuple[StarGraph, RotatingSplittingCircuit]:
    graph = _load_graph(args.graph)
    try:
        circuit = build_rotating_splitting_circuit(graph, seed=args.seed)
    except ValueError as exc:
        raise CommandError(str(exc), error="graph") from None
    return graph, circuit


def _cmd_check(args) -> tuple[int, dict, list[str]]:
    graph = _load_graph(args.graph)
    connected = graph.is_connected()
    fields = {
        "valid": True,
        "vertices": len(graph.vertices),
        "edges": len(graph.edges),
        "connected": connected,
    }
    lines = [
        f"ok: {len(graph.vertices)} vertices, {len(graph.edges)} edges, "
        + ("connected" if connected else "disconnected")
    ]
    return 0, fields, lines


def _cmd_circuit(args) -> tuple[int, dict, list[str]]:
    graph, circuit = _build_circuit(args)
    partner = graph.edge_partner_map
    lines = []
    edge_tokens = []
    visit_rows = []
    for visit in circuit.visits:
        lines.append(
            f"passage {visit.vertex}.{visit.arrival}->{visit.vertex}.{visit.departure}"
        )
        departure = HalfEdge(visit.vertex, visit.departure)
        arrival = partner[departure]
        token = f"{departure.vertex}.{departure.slot}-{arrival.vertex}.{arrival.slot}"
        edge_tokens.append(token)
        lines.append(f"edge {token}")
        visit_rows.append(
            {
                "vertex": visit.vertex,
                "arrival": visit.arrival,
                "departure": visit.departure,
            }
        )
    kinds = {
        str(v): circuit.vertex_kind(v).value for v in graph.vertices
    }
    fields = {"visits": visit_rows, "edges": edge_tokens, "kinds": kinds}
    return 0, fields, lines


def _cmd_diagram(args) -> tuple[int, dict, list[str]]:
    graph, circuit = _build_circuit(args)
    star = build_star_chord_diagram(graph, circuit)
    elements = []
    for element in star.elements:
        if isinstance(element, StarChord):
            elements.append(
                {
                    "kind": "chord",
                    "vertex": element.vertex,
                    "positions": list(element.positions),
                    "signs": [element.sign],
                }
            )
        elif isinstance(element, Triad):
            elements.append(
                {
                    "kind": "triad",
                    "vertex": element.vertex,
                    "positions": list(element.positions),
                    "signs": list(element.signs),
                }
            )
        elif isinstance(element, DoubleChord):
            elements.append(
                {
                    "kind": "double",
                    "vertex": element.vertex,
                    "principal": element.principal,
                    "outers": list(element.outers),
                    "signs": list(element.signs),
                }
            )
    fields = {"points": star.point_count, "elements": elements}
    return 0, fields, format_star_diagram(star).splitlines()


def _cmd_expand(args) -> tuple[int, dict, list[str]]:
    graph, circuit = _build_circuit(args)
    dprime = expand(build_star_chord_diagram(graph, circuit))
    fields = {
        "points": dprime.point_count,
        "chords": [
            {
                "a": c.a,
                "b": c.b,
                "sign": c.sign,
                "group": f"{c.group[0]}:{c.group[1]}",
            }
            for c in dprime.chords
        ],
    }
    return 0, fields, format_diagram(dprime).splitlines()


def _cmd_spectrum(args) -> tuple[int, dict, list[str]]:
    graph = _load_graph(args.graph)
    try:
        report = genus_spectrum(graph, seed=args.seed)
    except ValueError as exc:
        raise CommandError(str(exc), error="graph") from None
    if report.orientability is Orientability.ORIENTABLE:
        raise CommandError(
            _GATE_DIAGNOSTIC,
            error="orientable-gate",
            fields={"gate": "orientable", "spectrum": [], "witnesses": {}},
        )
    witnesses = {str(g): list(report.witness_for(g)) for g in report.spectrum}
    fields = {
        "gate": "nonorientable",
        "spectrum": list(report.spectrum),
        "witnesses": witnesses,
    }
    lines = [
        "gate: nonorientable",
        "spectrum: " + " ".join(str(g) for g in report.spectrum),
    ]
    for g in report.spectrum:
        lines.append(f"witness {g}: {''.join(report.witness_for(g))}")
    return 0, fields, lines


def _cmd_genus(args) -> tuple[int, dict, list[str]]:
    graph = _load_graph(args.graph)
    try:
        report = genus_spectrum(graph, seed=args.seed)
    except ValueError as exc:
        raise CommandError(str(exc), error="graph") from None
    if report.orientability is Orientability.ORIENTABLE:
        raise CommandError(
            _GATE_DIAGNOSTIC,
            error="orientable-gate",
            fields={"gate": "orientable", "genus": args.g, "achievable": False},
        )
    achievable = args.g in report.spectrum
    witness = report.witness_for(args.g)
    fields = {
        "gate": "nonorientable",
        "genus": args.g,
        "achievable": achievable,
        "witness": list(witness) if witness is not None else None,
    }
    return (0 if achievable else 1), fields, [
        "achievable" if achievable else "not achievable"
    ]


def _decision_result(report: DecisionReport) -> tuple[int, dict, list[str]]:
    if report.method == "orientable-gate":
        raise CommandError(
            _GATE_DIAGNOSTIC,
            error="orientable-gate",
            fields={"gate": "orientable", "embeddable": False, "method": report.method},
        )
    fields: dict = {
        "gate": "nonorientable",
        "embeddable": report.answer,
        "method": report.method,
        "witness": None,
    }
    if report.witness is not None:
        fields["witness"] = {
            "sides": list(report.witness.sides),
            "rank_w": report.witness.rank_w,
            "rank_b": report.witness.rank_b,
        }
    lines = ["embeddable" if report.answer else "not embeddable"]
    return (0 if report.answer else 1), fields, lines


def _cmd_rp2(args) -> tuple[int, dict, list[str]]:
    graph = _load_graph(args.graph)
    try:
        report = rp2_embeddable(graph, seed=args.seed)
    except ValueError as exc:
        raise CommandError(str(exc), error="graph") from None
    return _decision_result(report)


def _cmd_klein(args) -> tuple[int, dict, list[str]]:
    graph = _load_graph(args.graph)
    try:
        report = klein_embeddable(graph, seed=args.seed)
    except ValueError as exc:
        raise CommandError(str(exc), error="graph") from None
    return _decision_result(report)


def _verify_one(label: str, graph: StarGraph, seed: int | None) -> list[dict]:
    text = format_graph(graph)
    report = genus_spectrum(graph, seed=seed)
    solver_spectrum = sorted(report.spectrum)
    oracle_pairs = atom_spectrum(graph)
    oracle_spectrum = sorted(g for g, orientable in oracle_pairs if not orientable)
    mismatches = []
    if solver_spectrum != oracle_spectrum:
        mismatches.append(
            {
                "kind": "spectrum",
                "label": label,
                "solver": solver_spectrum,
                "oracle": oracle_spectrum,
                "graph": text,
            }
        )
    rp2_answer = rp2_embeddable(graph, seed=seed).answer
    if rp2_answer != (1 in oracle_spectrum):
        mismatches.append(
            {
                "kind": "rp2",
                "label": label,
                "solver": rp2_answer,
                "oracle": 1 in oracle_spectrum,
                "graph": text,
            }
        )
    klein_answer = klein_embeddable(graph, seed=seed).answer
    if klein_answer != (2 in oracle_spectrum):
        mismatches.append(
            {
                "kind": "klein",
                "label": label,
                "solver": klein_answer,
                "oracle": 2 in oracle_spectrum,
                "graph": text,
            }
        )
    return mismatches


def _cmd_oracle_verify(args) -> tuple[int, dict, list[str]]:
    if args.graph is not None:
        graphs = [(f"file:{args.graph}", _load_graph(args.graph))]
    else:
        rng = random.Random(args.seed)
        graphs = [
            (f"random:{i}", random_star_graph(rng, args.max_vertices))
            for i in range(args.count)
        ]
    mismatches: list[dict] = []
    for label, graph in graphs:
        try:
            mismatches.extend(_verify_one(label, graph, args.seed))
        except ValueError as exc:
            raise CommandError(f"{label}: {exc}", error="graph") from None
    fields = {"checked": len(graphs), "mismatches": mismatches, "ok": not mismatches}
    lines = []
    for m in mismatches:
        lines.append(
            f"mismatch [{m['kind']}] {m['label']}: "
            f"solver={m['solver']} oracle={m['oracle']}"
        )
        lines.append("reproducer:")
        lines.extend("  " + row for row in m["graph"].splitlines())
    verdict = "ok" if not mismatches else "FAIL"
    lines.append(
        f"{verdict}: {len(graphs)} graphs checked, {len(mismatches)} mismatches"
    )
    return (0 if not mismatches else 1), fields, lines


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosscap",
        description=(
            "Decide which nonorientable surfaces admit checkerboard "
            "embeddings of a star graph."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, seed: bool = True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="graph file")
        if seed:
            p.add_argument(
                "--seed", type=int, default=None,
                help="randomize the circuit construction",
            )
        else:
            p.set_defaults(seed=None)
        p.add_argument("--json", action="store_true", help="structured output")
        p.set_defaults(handler=handler)
        return p

    add("check", _cmd_check, "validate a graph file", seed=False)
    add("circuit", _cmd_circuit, "print a rotating-splitting circuit")
    add("diagram", _cmd_diagram, "print the star chord diagram of the circuit")
    add("expand", _cmd_expand, "print the expanded signed chord diagram")
    genus_parser = add(
        "genus", _cmd_genus, "decide whether a given nonorientable genus is achievable"
    )
    genus_parser.add_argument("--g", type=int, required=True, help="genus to test")
    add("spectrum", _cmd_spectrum, "print all achievable nonorientable genera")
    add("rp2", _cmd_rp2, "fast test: projective-plane embeddability")
    add("klein", _cmd_klein, "fast test: Klein-bottle embeddability")

    verify = sub.add_parser(
        "oracle-verify", help="cross-check the solver against the brute-force oracle"
    )
    verify.add_argument(
        "graph", nargs="?", default=None, help="graph file (omit for a random family)"
    )
    verify.add_argument("--seed", type=int, default=0, help="random family seed")
    verify.add_argument("--count", type=int, default=25, help="number of random graphs")
    verify.add_argument(
        "--max-vertices", type=int, default=5, dest="max_vertices",
        help="largest random graph size",
    )
    verify.add_argument("--json", action="store_true", help="structured output")
    verify.set_defaults(handler=_cmd_oracle_verify)
    return parser


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    payload: dict = {"schema": SCHEMA, "command": args.command}
    try:
        code, fields, lines = args.handler(args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        if args.json:
            payload["error"] = "parse"
            payload["detail"] = str(exc)
            sys.stdout.write(_dump(payload))
        return 2
    except CommandError as exc:
        sys.stderr.write(f"error: {exc}\n")
        if args.json:
            payload["error"] = exc.error
            payload.update(exc.fields)
            sys.stdout.write(_dump(payload))
        return 2
    if args.json:
        payload.update(fields)
        sys.stdout.write(_dump(payload))
    else:
        sys.stdout.write("".join(line + "\n" for line in lines))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
