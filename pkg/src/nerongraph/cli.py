"""Command line front end: file ingestion, reports, the built-in example
table and the exhaustive lemma verifier.

Input documents are JSON::

    {
      "name": "banana",
      "r": 2,
      "m1": 1,
      "vertices": [{"id": "v0"}, {"id": "v1", "genus": 1}],
      "edges": [
        {"id": "e0", "tail": "v0", "tip": "v1"},
        {"id": "e1", "tail": "v0", "tip": "v1", "thickness": 1, "stabilizer": 1}
      ],
      "multidegree": {"v0": 1, "v1": -1}
    }

with ``m1`` defaulting to 1, ``genus`` to 0, ``thickness`` and
``stabilizer`` to 1 and ``multidegree`` optional.  Machine-readable
reports echo the normalised input, so analyse -> serialise -> re-analyse
is idempotent.

Exit codes: 0 success, 1 counterexample found by verify-lemma, 2 input
or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import __version__
from .errors import BadModulus, NeronGraphError, ParseError
from .graph import MultiGraph
from .invariants import (
    AnalysisReport,
    ReductionData,
    analyze,
    circuit_invariant_c,
    index_m2,
    index_m3,
    thickness_invariant_t,
)
from .fixtures import paper_fixtures
from .enumeration import verify_equivalence


# -- input documents --------------------------------------------------------


def _expect(value: Any, kind: type, path: str) -> Any:
    names = {dict: "object", list: "array", str: "string", int: "integer"}
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise ParseError(f"{path}: expected integer, got {value!r}")
    if kind is not int and not isinstance(value, kind):
        raise ParseError(f"{path}: expected {names.get(kind, kind.__name__)}, got {value!r}")
    return value


def _known_keys(obj: dict, allowed: set[str], path: str) -> None:
    for key in obj:
        if key not in allowed:
            raise ParseError(f"{path}.{key}: unknown field")


def parse_input_document(obj: Any) -> tuple[str, ReductionData]:
    """Turn a decoded JSON document into named reduction data, raising
    :class:`ParseError` with a field-precise path on any malformation."""
    _expect(obj, dict, "document")
    _known_keys(obj, {"name", "r", "m1", "vertices", "edges", "multidegree"}, "document")
    name = _expect(obj.get("name", "input"), str, "name")
    if "r" not in obj:
        raise ParseError("r: required field is missing")
    r = _expect(obj["r"], int, "r")
    m1 = _expect(obj.get("m1", 1), int, "m1")

    vertices: list[str] = []
    genus: dict[str, int] = {}
    for i, rec in enumerate(_expect(obj.get("vertices", []), list, "vertices")):
        path = f"vertices[{i}]"
        _expect(rec, dict, path)
        _known_keys(rec, {"id", "genus"}, path)
        if "id" not in rec:
            raise ParseError(f"{path}.id: required field is missing")
        vid = _expect(rec["id"], str, f"{path}.id")
        vertices.append(vid)
        g = _expect(rec.get("genus", 0), int, f"{path}.genus")
        if g < 0:
            raise ParseError(f"{path}.genus: must be nonnegative, got {g}")
        genus[vid] = g

    edges: list[tuple[str, str, str]] = []
    thickness: dict[str, int] = {}
    stabilizer: dict[str, int] = {}
    for i, rec in enumerate(_expect(obj.get("edges", []), list, "edges")):
        path = f"edges[{i}]"
        _expect(rec, dict, path)
        _known_keys(rec, {"id", "tail", "tip", "thickness", "stabilizer"}, path)
        for field in ("id", "tail", "tip"):
            if field not in rec:
                raise ParseError(f"{path}.{field}: required field is missing")
        eid = _expect(rec["id"], str, f"{path}.id")
        tail = _expect(rec["tail"], str, f"{path}.tail")
        tip = _expect(rec["tip"], str, f"{path}.tip")
        edges.append((eid, tail, tip))
        for field, table, least in (("thickness", thickness, 1), ("stabilizer", stabilizer, 1)):
            value = _expect(rec.get(field, 1), int, f"{path}.{field}")
            if value < least:
                raise ParseError(f"{path}.{field}: must be >= {least}, got {value}")
            table[eid] = value

    multidegree = None
    if obj.get("multidegree") is not None:
        md = _expect(obj["multidegree"], dict, "multidegree")
        multidegree = {}
        for key, value in md.items():
            multidegree[_expect(key, str, "multidegree key")] = _expect(
                value, int, f"multidegree.{key}"
            )

    graph = MultiGraph(vertices, edges, genus, thickness, stabilizer)
    return name, ReductionData(graph=graph, r=r, m1=m1, multidegree=multidegree)


def normalized_document(name: str, data: ReductionData) -> dict:
    """The input document with all defaults made explicit."""
    g = data.graph
    doc: dict[str, Any] = {
        "name": name,
        "r": data.r,
        "m1": data.m1,
        "vertices": [{"id": v, "genus": g.genus(v)} for v in g.vertices],
        "edges": [
            {
                "id": e.id,
                "tail": e.tail,
                "tip": e.tip,
                "thickness": g.thickness(e.id),
                "stabilizer": g.stabilizer(e.id),
            }
            for e in g.edges
        ],
    }
    if data.multidegree is not None:
        doc["multidegree"] = {v: data.multidegree[v] for v in g.vertices}
    return doc


def report_document(name: str, data: ReductionData, report: AnalysisReport) -> dict:
    return {
        "tool": {"name": "nerongraph", "version": __version__},
        "input": normalized_document(name, data),
        "assumptions": {
            "tame_ramification": True,
            "semistable_model_over_base": True,
            "m1": data.m1,
            # For r <= 2 the finiteness criterion is an equivalence only
            # under the semistability assumption that m1 = 1 encodes.
            "small_r_criterion_conditional": data.r <= 2,
        },
        "report": {
            "b1": report.b1,
            "genus": report.genus,
            "c": report.c,
            "t": report.t,
            "phi": list(report.phi.invariant_factors),
            "phi_order": report.phi.order,
            "phi_r": list(report.phi_r.invariant_factors),
            "m1": report.m1,
            "m2": report.m2,
            "m3": report.m3,
            "group_neron_finite": report.group_neron_finite,
            "torsor_neron_finite": report.torsor_neron_finite,
            "r_divided": report.r_divided,
            "twisted_roots_finite": report.twisted_roots_finite,
            "torsion_count_special_fibre": report.torsion_count_special_fibre,
            "torsion_count_generic": report.torsion_count_generic,
        },
    }


# -- subcommands -------------------------------------------------------------


def _yesno(flag: bool | None) -> str:
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


def _print_human_report(name: str, data: ReductionData, report: AnalysisReport) -> None:
    g = data.graph
    lines = [
        ("input", f"{name} (r = {data.r}, m1 = {data.m1})"),
        ("vertices, edges", f"{g.n_vertices}, {g.n_edges}"),
        ("b1", str(report.b1)),
        ("total genus", str(report.genus)),
        ("component group", f"{report.phi} (order {report.phi.order})"),
        (f"{data.r}-torsion of it", str(report.phi_r)),
        ("circuit invariant c", str(report.c)),
        ("thickness invariant t", str(report.t)),
        ("m1, m2, m3", f"{report.m1}, {report.m2}, {report.m3}"),
        ("group Neron model finite", _yesno(report.group_neron_finite)),
        ("root torsor finite", _yesno(report.torsor_neron_finite)),
        (f"{data.r}-divided", _yesno(report.r_divided)),
        ("twisted roots finite", _yesno(report.twisted_roots_finite)),
        ("torsion on special fibre", str(report.torsion_count_special_fibre)),
        ("torsion generically", str(report.torsion_count_generic)),
    ]
    width = max(len(k) for k, _ in lines)
    for key, value in lines:
        print(f"{key:<{width}}  {value}")


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        with open(args.path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        print(f"error: {args.path}: line {exc.lineno}, column {exc.colno}: {exc.msg}",
              file=sys.stderr)
        return 2
    name, data = parse_input_document(obj)
    if args.r is not None:
        data = ReductionData(
            graph=data.graph, r=args.r, m1=data.m1, multidegree=data.multidegree
        )
    report = analyze(data)
    if args.format == "machine":
        print(json.dumps(report_document(name, data, report), indent=2))
    else:
        _print_human_report(name, data, report)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    r = args.r
    if r <= 0 or r % 4 != 0:
        raise BadModulus(f"the table assumes r is a positive multiple of 4, got {r}")
    rows = []
    for name, graph in paper_fixtures():
        data = ReductionData(graph=graph, r=r)
        rows.append(
            (
                name,
                circuit_invariant_c(graph),
                thickness_invariant_t(graph),
                data.m1,
                index_m2(data),
                index_m3(data),
            )
        )
    print(f"r = {r}")
    print()
    header = ("fixture", "c", "t", "m1", "m2", "m3")
    widths = [
        max(len(str(row[i])) for row in [header, *rows]) for i in range(len(header))
    ]
    def fmt(row):
        name = f"{row[0]:<{widths[0]}}"
        rest = "  ".join(f"{str(x):>{widths[i + 1]}}" for i, x in enumerate(row[1:]))
        return f"{name}  {rest}"
    print(fmt(header))
    for row in rows:
        print(fmt(row))
    return 0


def cmd_verify_lemma(args: argparse.Namespace) -> int:
    report = verify_equivalence(max_edges=args.max_edges, max_q=args.max_q)
    for m in sorted(report.graphs_by_edges):
        count = report.graphs_by_edges[m]
        print(f"edges={m}: {count} graph{'s' if count != 1 else ''}")
    print(
        f"checked {report.total_graphs} graphs x q <= {report.max_q}: "
        f"{report.checks} criterion triples, "
        f"{len(report.counterexamples)} counterexamples"
    )
    if not report.ok:
        for line in report.counterexamples:
            print(f"counterexample: {line}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nerongraph",
        description=(
            "Decide finiteness of Neron models of r-torsion Picard schemes "
            "and root torsors from dual-graph reduction data."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="analyze one JSON input document")
    p_analyze.add_argument("path", help="path to the input document")
    p_analyze.add_argument("--r", type=int, default=None, help="override the document's r")
    p_analyze.add_argument(
        "--format", choices=("table", "machine"), default="table",
        help="human-readable table or machine-readable JSON",
    )
    p_analyze.set_defaults(func=cmd_analyze)

    p_table = sub.add_parser(
        "table", help="print c, t, m1, m2, m3 for the six built-in graphs"
    )
    p_table.add_argument(
        "--r", type=int, default=4, help="torsion order, a positive multiple of 4"
    )
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser(
        "verify-lemma",
        help="exhaustively check the three-way criterion equivalence",
    )
    p_verify.add_argument("--max-edges", type=int, default=6)
    p_verify.add_argument("--max-q", type=int, default=6)
    p_verify.set_defaults(func=cmd_verify_lemma)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NeronGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
