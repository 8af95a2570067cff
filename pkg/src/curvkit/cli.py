"""Command-line interface.

Subcommands: girth, curvature-cd, curvature-cde, verify, gen.

Exit codes: 0 success (verify: no failing vertex), 1 a curvature bound was
violated (witness embedded in the JSON report), 2 input parse/validation
error, 3 every vertex failed the girth precondition, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from math import isinf
from pathlib import Path

from . import generators
from .cd import cd_curvature
from .cde import cde_estimate
from .generators import BadParameterError
from .girth import vertex_girth
from .graph import Graph, GraphError, parse_edge_list, serialize_edge_list
from .report import dumps, format_float, girth_json, report_csv_rows, report_document
from .verify import verify_theorems

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_NO_ELIGIBLE_VERTEX = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse variant that reports usage problems instead of exiting 2."""

    def error(self, message):
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="curvkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p_girth = sub.add_parser("girth", help="graph girth, optionally per vertex")
    p_girth.add_argument("file", help="edge-list file")
    p_girth.add_argument("--per-vertex", action="store_true")
    p_girth.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_girth.set_defaults(handler=cmd_girth)

    p_cd = sub.add_parser("curvature-cd", help="pointwise curvature K(x, dim)")
    p_cd.add_argument("file")
    p_cd.add_argument("--dim", type=float, default=2.0)
    p_cd.add_argument("--vertex", type=int, default=None)
    p_cd.add_argument("--format", choices=["json", "csv"], default="json")
    p_cd.set_defaults(handler=cmd_curvature_cd)

    p_cde = sub.add_parser(
        "curvature-cde", help="sampled minima of the exponential-type ratio"
    )
    p_cde.add_argument("file")
    p_cde.add_argument("--dim", type=float, default=2.0)
    p_cde.add_argument("--samples", type=int, default=10000)
    p_cde.add_argument("--seed", type=int, default=0)
    p_cde.add_argument("--vertex", type=int, default=None)
    p_cde.add_argument("--format", choices=["json", "csv"], default="json")
    p_cde.set_defaults(handler=cmd_curvature_cde)

    p_verify = sub.add_parser("verify", help="verify the girth-5 curvature bounds")
    p_verify.add_argument("file")
    p_verify.add_argument("--theorem", choices=["cd", "cde", "both"], default="both")
    p_verify.add_argument("--dim", type=float, default=2.0)
    p_verify.add_argument("--samples", type=int, default=10000)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--min-girth", type=int, default=5)
    p_verify.add_argument("--format", choices=["json", "csv"], default="json")
    p_verify.add_argument(
        "--strict-global-girth",
        action="store_true",
        help="gate on the whole-graph girth instead of per-vertex girth",
    )
    p_verify.set_defaults(handler=cmd_verify)

    p_gen = sub.add_parser("gen", help="write a generated graph as an edge list")
    p_gen.add_argument(
        "family",
        choices=["cycle", "path", "star", "complete", "tree", "petersen", "random-girth"],
    )
    p_gen.add_argument("params", type=int, nargs="*")
    p_gen.add_argument("--min-girth", type=int, default=5)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("-o", "--output", default=None)
    p_gen.set_defaults(handler=cmd_gen)
    return parser


def _load_graph(path: str) -> Graph:
    return parse_edge_list(Path(path).read_bytes())


def _check_dim(dim: float) -> None:
    if not dim > 0:
        raise UsageError(f"--dim must be positive, got {dim}")


def _vertices(g: Graph, vertex: int | None) -> list[int]:
    if vertex is None:
        return list(range(g.vertex_count))
    if not 0 <= vertex < g.vertex_count:
        raise GraphError(f"vertex {vertex} out of range 0..{g.vertex_count - 1}")
    return [vertex]


def _print_csv(rows: list[list[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _girth_text(value) -> str:
    return "inf" if isinf(value) else str(int(value))


def cmd_girth(args) -> int:
    g = _load_graph(args.file)
    values = [vertex_girth(g, x) for x in range(g.vertex_count)]
    whole = min(values)
    if args.format == "text":
        if args.per_vertex:
            for x, value in enumerate(values):
                print(f"{x} {_girth_text(value)}")
        else:
            print(_girth_text(whole))
    elif args.format == "json":
        doc = {"girth": girth_json(whole)}
        if args.per_vertex:
            doc["per_vertex"] = [
                {"vertex": x, "girth": girth_json(v)} for x, v in enumerate(values)
            ]
        sys.stdout.write(dumps(doc))
    else:
        if args.per_vertex:
            rows = [["vertex", "girth"]]
            rows += [[str(x), _girth_text(v)] for x, v in enumerate(values)]
        else:
            rows = [["girth"], [_girth_text(whole)]]
        _print_csv(rows)
    return EXIT_OK


def cmd_curvature_cd(args) -> int:
    _check_dim(args.dim)
    g = _load_graph(args.file)
    records = []
    for x in _vertices(g, args.vertex):
        result = cd_curvature(g, x, args.dim)
        records.append({"vertex": x, "dim": args.dim, "curvature": result.curvature_K})
    if args.format == "json":
        sys.stdout.write(dumps({"dim": args.dim, "records": records}))
    else:
        rows = [["vertex", "dim", "curvature"]] + [
            [str(r["vertex"]), format_float(r["dim"]), format_float(r["curvature"])]
            for r in records
        ]
        _print_csv(rows)
    return EXIT_OK


def cmd_curvature_cde(args) -> int:
    _check_dim(args.dim)
    if args.samples < 1:
        raise UsageError(f"--samples must be >= 1, got {args.samples}")
    g = _load_graph(args.file)
    records = []
    for x in _vertices(g, args.vertex):
        est = cde_estimate(g, x, args.dim, args.samples, args.seed)
        records.append(
            {
                "vertex": x,
                "dim": args.dim,
                "samples": est.samples_used,
                "seed": est.seed,
                "sampled_min": est.sampled_min,
            }
        )
    if args.format == "json":
        doc = {
            "dim": args.dim,
            "samples": args.samples,
            "seed": args.seed,
            "records": records,
        }
        sys.stdout.write(dumps(doc))
    else:
        rows = [["vertex", "dim", "samples", "seed", "sampled_min"]] + [
            [
                str(r["vertex"]),
                format_float(r["dim"]),
                str(r["samples"]),
                str(r["seed"]),
                format_float(r["sampled_min"]),
            ]
            for r in records
        ]
        _print_csv(rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_dim(args.dim)
    if args.samples < 1:
        raise UsageError(f"--samples must be >= 1, got {args.samples}")
    if args.min_girth < 3:
        raise UsageError(f"--min-girth must be >= 3, got {args.min_girth}")
    g = _load_graph(args.file)
    report = verify_theorems(
        g,
        theorem=args.theorem,
        samples=args.samples,
        seed=args.seed,
        dim=args.dim,
        min_girth=args.min_girth,
        strict_global_girth=args.strict_global_girth,
    )
    run_cde = args.theorem in ("cde", "both")
    params = {
        "theorem": args.theorem,
        "dim": args.dim,
        "samples": args.samples if run_cde else None,
        "seed": args.seed if run_cde else None,
        "min_girth": args.min_girth,
        "strict_global_girth": args.strict_global_girth,
    }
    if args.format == "json":
        sys.stdout.write(dumps(report_document(g, report, params)))
    else:
        _print_csv(report_csv_rows(report))
    if report.has_failures:
        return EXIT_VIOLATION
    if report.all_precondition_not_met:
        return EXIT_NO_ELIGIBLE_VERTEX
    return EXIT_OK


def cmd_gen(args) -> int:
    family = args.family
    params = args.params

    def need(count: int) -> None:
        if len(params) != count:
            raise UsageError(
                f"family {family!r} takes {count} parameter(s), got {len(params)}"
            )

    if family == "cycle":
        need(1)
        g = generators.cycle(params[0])
    elif family == "path":
        need(1)
        g = generators.path(params[0])
    elif family == "star":
        need(1)
        g = generators.star(params[0])
    elif family == "complete":
        need(1)
        g = generators.complete(params[0])
    elif family == "tree":
        need(1)
        g = generators.random_tree(params[0], args.seed)
    elif family == "petersen":
        need(0)
        g = generators.petersen()
    else:
        need(2)
        g = generators.random_with_girth(params[0], params[1], args.min_girth, args.seed)

    text = serialize_edge_list(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "handler", None) is None:
            raise UsageError("a subcommand is required (see --help)")
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BadParameterError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
