"""Command-line interface.

Subcommands cover the main library entry points: validating documents,
lifting colorings onto modular graphs, dual graphs of curve configurations,
strata enumeration, dimension formulas, evaluating morphisms to gluing
recipes, the operad axiom checker, and DOT export.  Exit codes: 0 success,
1 failed validation or failed check, 2 usage or malformed input documents.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .canon import certificate_digest
from .curves import dual_graph
from .errors import SchemaError, SusyKitError
from .graphs import edges, tails
from .jsonio import (
    curve_from_json,
    dumps,
    graph_from_json,
    graph_to_json,
    load_curve,
    load_graph,
    load_morphism,
    morphism_from_json,
    recipe_to_json,
    _load,
)
from .lifting import enumerate_edge_colorings, lift_count_general, lift_tree_coloring
from .operad import check_operad_axioms, evaluate_operad, stratum_dimension
from .strata import contraction_poset, enumerate_modular_shapes, enumerate_strata
from .susy import R, SusyGraph, genus, is_stable
from .dot import graph_to_dot, poset_to_dot

__all__ = ["main"]


def _labels(raw: str) -> list[str]:
    return [part.strip() for part in raw.split(",") if part.strip()]


def _emit(args: argparse.Namespace, data: dict, table: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(dumps(data))
    else:
        sys.stdout.write("\n".join(table) + "\n")


def _graph_summary(g: SusyGraph) -> list[str]:
    tail_list = tails(g.graph)
    edge_list = edges(g.graph)
    r_tails = sum(1 for f in tail_list if g.color_of(f) == R)
    r_edges = sum(1 for a, _ in edge_list if g.color_of(a) == R)
    return [
        f"vertices      {len(g.vertices)}",
        f"edges         {len(edge_list)} ({r_edges} R)",
        f"tails         {len(tail_list)} ({r_tails} R)",
        f"total genus   {genus(g)}",
        f"modular view  {'yes' if g.modular else 'no'}",
        f"stable        {'yes' if is_stable(g).stable else 'no'}",
        f"digest        {certificate_digest(g)}",
    ]


def _cmd_validate(args: argparse.Namespace) -> int:
    data = _load(args.file)
    kind = args.kind
    if kind == "auto":
        if isinstance(data, dict) and "components" in data:
            kind = "curve"
        elif isinstance(data, dict) and "flag_map" in data:
            kind = "morphism"
        else:
            kind = "graph"
    try:
        if kind == "graph":
            graph_from_json(data)
        elif kind == "morphism":
            morphism_from_json(data, base_dir=Path(args.file).parent)
        else:
            curve_from_json(data)
    except SchemaError:
        raise
    except SusyKitError as exc:
        print(f"invalid {kind}: {exc}", file=sys.stderr)
        return 1
    print(f"valid {kind}")
    return 0


def _cmd_lift(args: argparse.Namespace) -> int:
    g = load_graph(args.tree)
    ns, r = _labels(args.ns), _labels(args.r)
    count = lift_count_general(g, ns, r)
    if args.count:
        _emit(args, {"count": count}, [f"colorings     {count}"])
        return 0
    if args.enumerate:
        colorings = enumerate_edge_colorings(g, ns, r)
        data = {
            "count": count,
            "colorings": [graph_to_json(c) for c in colorings],
        }
        table = [f"colorings     {count}"] + [
            f"  [{i}] digest {certificate_digest(c)}"
            for i, c in enumerate(colorings)
        ]
        _emit(args, data, table)
        return 0
    lifted = lift_tree_coloring(g, ns, r)
    _emit(args, graph_to_json(lifted), _graph_summary(lifted))
    return 0


def _cmd_dual_graph(args: argparse.Namespace) -> int:
    g = dual_graph(load_curve(args.file))
    _emit(args, graph_to_json(g), _graph_summary(g))
    return 0


def _stratum_record(g: SusyGraph) -> dict:
    record = graph_to_json(g)
    record["certificate"] = certificate_digest(g)
    return record


def _cmd_enumerate(args: argparse.Namespace) -> int:
    ns = [str(i) for i in range(1, args.ns + 1)]
    r = [str(i) for i in range(args.ns + 1, args.ns + args.r + 1)]
    if args.shapes:
        shapes = enumerate_modular_shapes(args.genus, ns + r, args.max_edges)
        data = {
            "count": len(shapes),
            "shapes": [_stratum_record(s) for s in shapes],
        }
        table = [f"shapes        {len(shapes)}"] + [
            f"  [{i}] edges {len(edges(s.graph))} digest {certificate_digest(s)}"
            for i, s in enumerate(shapes)
        ]
        _emit(args, data, table)
        return 0
    strata = enumerate_strata(args.genus, ns, r, args.max_edges)
    data = {"count": len(strata), "strata": [_stratum_record(s) for s in strata]}
    table = [f"strata        {len(strata)}"] + [
        f"  [{i}] edges {len(edges(s.graph))} digest {certificate_digest(s)}"
        for i, s in enumerate(strata)
    ]
    if args.poset:
        poset = contraction_poset(strata)
        data["poset"] = {
            "ranks": list(poset.ranks),
            "covers": {
                str(i): sorted(j for a, j in poset.covers if a == i)
                for i in range(len(strata))
            },
        }
        table.append("covers:")
        table.extend(f"  S{i} -> S{j}" for i, j in sorted(poset.covers))
    _emit(args, data, table)
    return 0


def _cmd_dims(args: argparse.Namespace) -> int:
    g = load_graph(args.file)
    dim = stratum_dimension(g)
    data = {
        "even": dim.even,
        "odd": int(dim.odd),
        "codim": list(dim.codimension),
    }
    table = [
        f"even dimension  {dim.even}",
        f"odd dimension   {int(dim.odd)}",
        f"codimension     ({dim.codimension[0]}, {dim.codimension[1]})",
    ]
    _emit(args, data, table)
    return 0


def _cmd_evaluate(args: argparse.Namespace) -> int:
    h = load_morphism(args.file)
    rec = evaluate_operad(h)
    data = recipe_to_json(rec)
    table = [
        f"mode            {rec.source.mode}",
        f"source factors  {len(rec.source.factors)}",
        f"target factors  {len(rec.target.factors)}",
        f"NS gluings      {len(rec.ns_gluings)}",
        f"R gluings       {len(rec.r_gluings)}",
        f"ramond rank     {rec.ramond_fiber_rank}",
    ]
    _emit(args, data, table)
    return 0


def _cmd_check_axioms(args: argparse.Namespace) -> int:
    report = check_operad_axioms(seed=args.seed, cases=args.cases)
    data = {
        "checked": dict(sorted(report.checked.items())),
        "failures": list(report.failures),
        "passed": report.passed,
    }
    table = [
        f"{name}  {count} instances"
        for name, count in sorted(report.checked.items())
    ]
    table.append("passed" if report.passed else "FAILED")
    table.extend(f"  {f}" for f in report.failures)
    _emit(args, data, table)
    return 0 if report.passed else 1


def _cmd_export_dot(args: argparse.Namespace) -> int:
    data = _load(args.file)
    # strata documents render as a poset; single graphs as a picture
    records = None
    if isinstance(data, list):
        records = data
    elif isinstance(data, dict) and "strata" in data:
        records = data["strata"]
    if records is not None:
        strata = []
        for record in records:
            if not isinstance(record, dict):
                raise SchemaError("strata entries must be objects")
            record = dict(record)
            record.pop("certificate", None)
            strata.append(graph_from_json(record))
        sys.stdout.write(poset_to_dot(contraction_poset(strata)))
        return 0
    sys.stdout.write(graph_to_dot(graph_from_json(data)))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="susykit",
        description="SUSY graph calculus: validation, lifting, strata, gluing recipes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("json", "table"),
            default="json",
            help="output format (default: json)",
        )

    p = sub.add_parser("validate", help="validate a JSON document")
    p.add_argument("file")
    p.add_argument(
        "--kind",
        choices=("auto", "graph", "morphism", "curve"),
        default="auto",
    )
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("lift", help="color a modular graph's edges")
    p.add_argument("--tree", required=True, help="modular graph JSON file")
    p.add_argument("--ns", default="", help="comma-separated NS tail labels")
    p.add_argument("--r", default="", help="comma-separated R tail labels")
    p.add_argument("--enumerate", action="store_true", help="list every coloring")
    p.add_argument("--count", action="store_true", help="print only the count")
    add_format(p)
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("dual-graph", help="dual graph of a curve configuration")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=_cmd_dual_graph)

    p = sub.add_parser("enumerate", help="enumerate boundary strata")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--ns", type=int, default=0, help="number of NS tail labels")
    p.add_argument("--r", type=int, default=0, help="number of R tail labels")
    p.add_argument("--poset", action="store_true", help="include contraction order")
    p.add_argument("--max-edges", type=int, default=None)
    p.add_argument(
        "--shapes", action="store_true", help="modular shapes only, no colorings"
    )
    add_format(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("dims", help="stratum dimensions of a stable graph")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("evaluate", help="evaluate a morphism to a gluing recipe")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("check-axioms", help="run the operad axiom checker")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    add_format(p)
    p.set_defaults(func=_cmd_check_axioms)

    p = sub.add_parser("export-dot", help="render a graph or strata file as DOT")
    p.add_argument("file", help="graph JSON or strata JSON (list or enumerate output)")
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SusyKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
