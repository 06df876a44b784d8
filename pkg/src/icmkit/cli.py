"""Command-line interface.

Exit codes: 0 ok, 2 input or parse error, 3 enumeration guard, 4 internal
consistency violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import __version__
from .atlas import ATLAS_LIMIT, COLUMN_HELP, build_atlas, rows_csv, worker_count
from .betti import HOCHSTER_LIMIT, hochster_betti
from .complex import SimplicialComplex, alexander_dual, simplex, skeleton, truncated_complex
from .document import ReportDocument
from .errors import EnumerationLimitError, IcmkitError, InternalConsistencyError, ParseError
from .fileformat import format_edges, format_facets, parse_edges, parse_facets
from .graphs import (
    DTreeRecipe,
    Graph,
    clique_complex,
    complete_graph,
    cycle_graph,
    dtree,
    empty_graph,
    independence_complex,
    path_graph,
    random_dtree_recipe,
)
from .homology import FieldSpec
from .invariants import report

HOMOLOGY_LIMIT = 25

EXIT_OK, EXIT_PARSE, EXIT_GUARD, EXIT_INTERNAL = 0, 2, 3, 4

GRAPH_GENERATORS = ("path", "cycle", "complete", "empty", "dtree", "rdtree")
COMPLEX_GENERATORS = ("simplex",)

GEN_HELP = (
    "generator spec: path:N, cycle:N, complete:N, empty:N, simplex:N, "
    "dtree:RECIPE (e.g. '3;3@0,1;2@2'), rdtree:SEED,STEPS,DMAX"
)


def _int_arg(spec: str, body: str) -> int:
    try:
        return int(body)
    except ValueError:
        raise ParseError(f"generator {spec!r} needs an integer argument", source="--gen") from None


def generate(spec: str) -> Graph | SimplicialComplex:
    kind, sep, body = spec.partition(":")
    if not sep:
        raise ParseError(f"generator {spec!r} has no ':' argument", source="--gen")
    if kind == "path":
        return path_graph(_int_arg(spec, body))
    if kind == "cycle":
        return cycle_graph(_int_arg(spec, body))
    if kind == "complete":
        return complete_graph(_int_arg(spec, body))
    if kind == "empty":
        return empty_graph(_int_arg(spec, body))
    if kind == "simplex":
        return simplex(_int_arg(spec, body))
    if kind == "dtree":
        return dtree(DTreeRecipe.parse(body))
    if kind == "rdtree":
        parts = body.split(",")
        if len(parts) != 3:
            raise ParseError("rdtree takes SEED,STEPS,DMAX", source="--gen")
        seed, steps, dmax = (_int_arg(spec, p) for p in parts)
        return dtree(random_dtree_recipe(seed, steps, dmax))
    raise ParseError(f"unknown generator {kind!r}", source="--gen")


@dataclass(frozen=True)
class LoadedInput:
    complex: SimplicialComplex
    descriptor: str


def _read(path: str | None) -> tuple[str, str]:
    if path is None or path == "-":
        return sys.stdin.read(), "<stdin>"
    with open(path, encoding="utf-8") as fh:
        return fh.read(), path


def load_input(args: argparse.Namespace) -> LoadedInput:
    side = getattr(args, "graph", None)
    if args.gen:
        obj = generate(args.gen)
        if isinstance(obj, Graph):
            side = side or "independence"
            cx = independence_complex(obj) if side == "independence" else clique_complex(obj)
            return LoadedInput(cx, f"gen:{args.gen} graph:{side}")
        if side:
            raise ParseError(f"--graph does not apply to the complex generator {args.gen!r}", source="--gen")
        return LoadedInput(obj, f"gen:{args.gen}")
    text, source = _read(args.input)
    if side:
        g = parse_edges(text, source)
        cx = independence_complex(g) if side == "independence" else clique_complex(g)
        return LoadedInput(cx, f"{source} graph:{side}")
    return LoadedInput(parse_facets(text, source), source)


def _guard(n: int, limit: int, what: str, args: argparse.Namespace) -> None:
    if n > limit and not args.unsafe_n:
        raise EnumerationLimitError(what, n, limit)


def cmd_report(args: argparse.Namespace) -> str:
    start = time.perf_counter()
    loaded = load_input(args)
    cx = loaded.complex
    field = FieldSpec.parse(args.field)
    _guard(cx.n, HOMOLOGY_LIMIT, "report", args)
    if args.betti:
        _guard(cx.n, HOCHSTER_LIMIT, "hochster_betti", args)
    rep = report(cx, field)
    table = None
    if args.betti:
        table = hochster_betti(cx, field, limit=cx.n if args.unsafe_n else HOCHSTER_LIMIT)
    wall = round(time.perf_counter() - start, 6) if args.timing else None
    doc = ReportDocument(loaded.descriptor, field, rep, __version__, table, wall)
    return doc.to_json() + "\n" if args.format == "json" else doc.to_text()


def cmd_dual(args: argparse.Namespace) -> str:
    return format_facets(alexander_dual(load_input(args).complex))


def cmd_skeleton(args: argparse.Namespace) -> str:
    return format_facets(skeleton(load_input(args).complex, args.i))


def cmd_truncate(args: argparse.Namespace) -> str:
    return format_facets(truncated_complex(load_input(args).complex, args.k))


def cmd_betti(args: argparse.Namespace) -> str:
    loaded = load_input(args)
    cx = loaded.complex
    field = FieldSpec.parse(args.field)
    _guard(cx.n, HOCHSTER_LIMIT, "hochster_betti", args)
    table = hochster_betti(cx, field, limit=cx.n if args.unsafe_n else HOCHSTER_LIMIT)
    if args.side == "ideal":
        table = table.to_ideal()
    if args.format == "json":
        return json.dumps(table.as_dict(), indent=2) + "\n"
    return table.render() + "\n"


def cmd_atlas(args: argparse.Namespace) -> str:
    field = FieldSpec.parse(args.field)
    limit = args.nmax if args.unsafe_n else ATLAS_LIMIT
    rows = build_atlas(args.nmax, field, worker_count(args.threads), limit=limit)
    if args.format == "jsonl":
        return "".join(json.dumps(r.as_dict()) + "\n" for r in rows)
    return rows_csv(rows)


def cmd_gen(args: argparse.Namespace) -> str:
    obj = generate(args.spec)
    if isinstance(obj, SimplicialComplex):
        if args.graph:
            raise ParseError(f"--graph does not apply to the complex generator {args.spec!r}", source="gen")
        return format_facets(obj)
    if args.graph == "independence":
        return format_facets(independence_complex(obj))
    if args.graph == "clique":
        return format_facets(clique_complex(obj))
    return format_edges(obj)


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="facet file, or edge list with --graph; '-' or omitted reads stdin")
    p.add_argument("--gen", metavar="SPEC", help=GEN_HELP)
    p.add_argument("--graph", choices=("independence", "clique"),
                   help="treat the input as a graph and use this complex of it")


def _add_field(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", default="Q", metavar="Q|Fp:P", help="coefficient field (default Q)")


def _add_unsafe(p: argparse.ArgumentParser) -> None:
    p.add_argument("--unsafe-n", action="store_true", help="lift the vertex-count guards")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="icmkit", description="Initially Cohen-Macaulay toolkit")
    parser.add_argument("--version", action="version", version=f"icmkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="all invariants and classifications of a complex")
    _add_input(p)
    _add_field(p)
    _add_unsafe(p)
    p.add_argument("--betti", action="store_true", help="attach the Hochster Betti table")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--timing", action="store_true", help="record wall time (output is then not reproducible)")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("dual", help="Alexander dual, as a facet file")
    _add_input(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("skeleton", help="i-skeleton, as a facet file")
    _add_input(p)
    p.add_argument("-i", type=int, required=True)
    p.set_defaults(func=cmd_skeleton)

    p = sub.add_parser("truncate", help="complex of the degree->=k part of the Stanley-Reisner ideal")
    _add_input(p)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("betti", help="graded Betti table via Hochster's formula")
    _add_input(p)
    _add_field(p)
    _add_unsafe(p)
    p.add_argument("--side", choices=("ring", "ideal"), default="ring")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("atlas", help="classification table over graph isomorphism classes",
                       epilog=COLUMN_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--nmax", type=int, required=True, help=f"largest vertex count (guard {ATLAS_LIMIT})")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--threads", type=int, default=None, help="worker processes (capped by ICMKIT_THREADS)")
    _add_field(p)
    _add_unsafe(p)
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("gen", help="emit a generated graph (edge list) or complex (facet file)")
    p.add_argument("spec", help=GEN_HELP)
    p.add_argument("--graph", choices=("independence", "clique"),
                   help="emit this complex of the generated graph instead of its edges")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except EnumerationLimitError as exc:
        print(f"icmkit: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InternalConsistencyError as exc:
        print(f"icmkit: internal consistency violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (IcmkitError, OSError) as exc:
        print(f"icmkit: {exc}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
