"""Command-line front end: construction, generation, checks, decomposition.

Results are JSON on stdout (or a file named with --out); diagnostics go to
stderr.  Exit status 0 means success / all checks passed, 1 means a
verification failed or a check came out negative, 2 means a usage or I/O
error.  Output is byte-identical for identical flags and seed; --pretty only
adds whitespace.
"""
from __future__ import annotations

import argparse
import json
import sys

from .decompose import (
    NotAKClassError,
    canonical_basis,
    decompose,
    verify_free_module,
)
from .gkm import (
    check_axial_axioms,
    check_connection_involution,
    check_three_independence,
    is_k_class,
)
from .laurent import ParseError
from .linalg import spans_full_lattice
from .quadric import (
    QuadricGraph,
    antipodal_product_class,
    monomial_class,
    supported_class,
    thom_class,
    vertex_map_from_json_dict,
    vertex_map_to_json_dict,
)
from .relations import ALL_KINDS, verify_all


class UsageError(Exception):
    """Bad flag combinations or unreadable inputs (exit status 2)."""


def _dump(doc, pretty: bool) -> str:
    if pretty:
        return json.dumps(doc, indent=2) + "\n"
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _write(doc, args) -> None:
    text = _dump(doc, args.pretty)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _load_vertex_map(ctx: QuadricGraph, path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON: {exc}") from None
    try:
        return vertex_map_from_json_dict(ctx, doc)
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _parse_subset(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise UsageError(f"--subset expects comma-separated integers, got {text!r}") from None


def _cmd_graph(args) -> int:
    ctx = QuadricGraph(args.n)
    _write(ctx.graph.to_json_dict(), args)
    return 0


def _cmd_gen(args) -> int:
    ctx = QuadricGraph(args.n)
    kind = args.cls
    if kind in ("M", "Minv"):
        if args.vertex is None:
            raise UsageError(f"--class {kind} requires --vertex")
        vm = monomial_class(ctx, args.vertex, inverted=(kind == "Minv"))
    elif kind == "Delta":
        if args.subset is None:
            raise UsageError("--class Delta requires --subset")
        vm = thom_class(ctx, _parse_subset(args.subset))
    elif kind == "F":
        if args.subset is None:
            raise UsageError("--class F requires --subset")
        vm = supported_class(ctx, _parse_subset(args.subset))
    elif kind == "X":
        vm = antipodal_product_class(ctx)
    elif kind == "basis":
        basis = canonical_basis(ctx)
        _write([vertex_map_to_json_dict(ctx, b) for b in basis.classes], args)
        return 0
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown class kind {kind!r}")
    _write(vertex_map_to_json_dict(ctx, vm), args)
    return 0


def _cmd_check(args) -> int:
    ctx = QuadricGraph(args.n)
    vm = _load_vertex_map(ctx, args.infile)
    report = is_k_class(ctx.graph, vm)
    _write(
        {
            "n": ctx.n,
            "is_k_class": report.ok,
            "failing_edges": [list(e) for e in report.failing_edges],
        },
        args,
    )
    return 0 if report.ok else 1


_RELATION_FLAG_TO_KINDS = {
    "all": ALL_KINDS,
    "1": ("product_vanishing",),
    "2": ("complete_set_split",),
    "3": ("peeling",),
    "4": ("antipodal_product",),
}


def _cmd_verify(args) -> int:
    ctx = QuadricGraph(args.n)
    report = verify_all(
        ctx,
        family_size_bound=args.family_bound,
        seed=args.seed,
        kinds=_RELATION_FLAG_TO_KINDS[args.relations],
    )
    _write(report.to_json_dict(), args)
    return 0 if report.ok else 1


def _cmd_decompose(args) -> int:
    ctx = QuadricGraph(args.n)
    vm = _load_vertex_map(ctx, args.infile)
    try:
        result = decompose(ctx, vm)
    except NotAKClassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _write(result.to_json_dict(ctx), args)
    return 0


def _selfcheck_one(n: int, trials: int, seed: int) -> dict:
    ctx = QuadricGraph(n)
    axioms = check_axial_axioms(ctx.graph, ctx.connection)
    three_independent = check_three_independence(ctx.graph)
    involution = check_connection_involution(ctx.graph, ctx.connection)
    effective = all(
        spans_full_lattice([ctx.graph.axial(*e) for e in ctx.graph.edges_from(v)], ctx.m)
        for v in ctx.vertices
    )

    sweep_failures = []
    checked = 0
    for v in ctx.vertices:
        for inverted in (False, True):
            checked += 1
            if not is_k_class(ctx.graph, monomial_class(ctx, v, inverted=inverted)):
                sweep_failures.append({"class": "Minv" if inverted else "M", "vertex": v})
    for members in ctx.admissible_subsets():
        checked += 1
        if not is_k_class(ctx.graph, thom_class(ctx, members)):
            sweep_failures.append({"class": "Delta", "subset": sorted(members)})

    relation_report = verify_all(ctx, seed=seed)
    module_report = verify_free_module(ctx, trials=trials, seed=seed)

    passed = (
        axioms.ok
        and three_independent
        and involution
        and effective
        and not sweep_failures
        and relation_report.ok
        and module_report.ok
    )
    return {
        "n": n,
        "structural": {
            "axiom_violations": len(axioms.violations),
            "three_independent": three_independent,
            "connection_involution": involution,
            "effective": effective,
        },
        "k_class_sweep": {"checked": checked, "failures": sweep_failures},
        "relations": relation_report.to_json_dict()["summary"],
        "free_module": module_report.to_json_dict(),
        "pass": passed,
    }


def _cmd_selfcheck(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    runs = [_selfcheck_one(n, args.trials, args.seed) for n in range(1, args.max_n + 1)]
    doc = {
        "max_n": args.max_n,
        "trials": args.trials,
        "seed": args.seed,
        "runs": runs,
        "pass": all(run["pass"] for run in runs),
    }
    _write(doc, args)
    return 0 if doc["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kquadric",
        description="Exact K-ring computations on even-dimensional quadric GKM graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="emit the labeled graph as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("gen", help="emit a generator class (or the whole basis) as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--class",
        dest="cls",
        required=True,
        choices=["M", "Minv", "Delta", "X", "F", "basis"],
    )
    p.add_argument("--vertex", type=int)
    p.add_argument("--subset", help="comma-separated vertex list, e.g. 2,4,6")
    p.add_argument("--out")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="test whether a vertex map file is a K-class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verify", help="run the relation suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--relations", choices=["all", "1", "2", "3", "4"], default="all")
    p.add_argument("--family-bound", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("decompose", help="decompose a K-class file over the canonical basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("selfcheck", help="run the full verification battery for n = 1..max-n")
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
