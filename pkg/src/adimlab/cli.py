"""Command line entry point.

Subcommands: compute, dim, info, formulas, bases, family, sweep, conjecture.
Graph sources: a generator spec (--graph), a graph6 literal (--g6) or a file
(--file, graph6 one-per-line or the plain "n m / u v" edge list).  Exit codes:
0 success, 1 a sweep/verification found violations, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families as families_mod
from . import formulas as formulas_mod
from . import verify as verify_mod
from .errors import AdimlabError
from .graph import (
    Graph,
    complement,
    complete,
    complete_bipartite,
    cycle,
    diameter,
    empty_graph,
    fan,
    fig1_graph,
    fig2_graph,
    fig3_graph,
    fig4_graph,
    fig5_graph,
    from_graph6,
    hypercube,
    is_connected,
    join,
    path,
    petersen,
    read_edge_list,
    to_graph6,
    twin_partition,
    wheel,
)
from .metric import adjacency_dimensionality, build_table, dimensionality
from .solver import enumerate_bases, solve_table

_GENERATORS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "empty": (empty_graph, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "hypercube": (hypercube, 1),
    "petersen": (petersen, 0),
    "fan": (fan, 1),
    "wheel": (wheel, 1),
    "fig1": (fig1_graph, 1),
    "fig2": (fig2_graph, 0),
    "fig3": (fig3_graph, 0),
    "fig4": (fig4_graph, 0),
    "fig5": (fig5_graph, 0),
}

GRAPH_SPEC_HELP = (
    "generator spec: name[:param[,param]] with combinators "
    "join:A+B and complement:SPEC; names: " + ", ".join(sorted(_GENERATORS))
)


def parse_graph_spec(spec: str) -> Graph:
    spec = spec.strip()
    if spec.startswith("join:"):
        rest = spec[len("join:"):]
        left, sep, right = rest.partition("+")
        if not sep:
            raise AdimlabError(f"join spec needs two '+'-separated parts: {spec!r}")
        return join(parse_graph_spec(left), parse_graph_spec(right))
    if spec.startswith("complement:"):
        return complement(parse_graph_spec(spec[len("complement:"):]))
    name, _, raw = spec.partition(":")
    if name not in _GENERATORS:
        raise AdimlabError(f"unknown generator {name!r}; {GRAPH_SPEC_HELP}")
    fn, arity = _GENERATORS[name]
    params = [int(p) for p in raw.split(",") if p] if raw else []
    if len(params) != arity:
        raise AdimlabError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def load_graph(args) -> Graph:
    if args.graph:
        return parse_graph_spec(args.graph)
    if args.g6:
        return from_graph6(args.g6)
    with open(args.file, "r", encoding="ascii") as fh:
        text = fh.read()
    first = text.strip().splitlines()[0] if text.strip() else ""
    if first and first.split()[0].isdigit():
        return read_edge_list(text)
    return from_graph6(first)


def parse_k_range(raw: str) -> list[int]:
    if ".." in raw:
        lo, hi = raw.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(raw)]


def _add_source_flags(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help=GRAPH_SPEC_HELP)
    src.add_argument("--g6", help="graph6 literal")
    src.add_argument("--file", help="path to a graph6 or edge-list file")


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=("table", "json", "csv"), default="table"
    )
    p.add_argument("--budget", type=int, default=None, help="solver node budget")
    p.add_argument("--out", help="write the output to this file instead of stdout")


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _emit_results(args, results: list[dict], columns: list[str]) -> None:
    if args.format == "json":
        _emit(args, json.dumps(results, indent=2))
    elif args.format == "csv":
        lines = [",".join(columns)]
        for row in results:
            lines.append(",".join(_csv_cell(row.get(c)) for c in columns))
        _emit(args, "\n".join(lines))
    else:
        widths = {
            c: max(len(c), *(len(_csv_cell(r.get(c))) for r in results))
            for c in columns
        }
        header = "  ".join(c.ljust(widths[c]) for c in columns)
        lines = [header, "-" * len(header)]
        for row in results:
            lines.append(
                "  ".join(_csv_cell(row.get(c)).ljust(widths[c]) for c in columns)
            )
        _emit(args, "\n".join(lines))


def _csv_cell(value) -> str:
    if isinstance(value, list):
        return " ".join(map(str, value))
    if isinstance(value, float):
        return f"{value:.3f}"
    return str(value)


def _solve_levels(args, g: Graph, t: int) -> list[dict]:
    table = build_table(g, t)
    rows = []
    for k in parse_k_range(args.k):
        res = solve_table(table, k, args.budget)
        rows.append(res.to_json_dict())
    return rows


def cmd_compute(args) -> int:
    g = load_graph(args)
    rows = _solve_levels(args, g, args.t)
    _emit_results(args, rows, ["k", "dimension", "witness", "nodes", "millis"])
    return 0


def cmd_dim(args) -> int:
    g = load_graph(args)
    if not is_connected(g):
        raise AdimlabError("the full metric needs a connected graph")
    rows = _solve_levels(args, g, max(1, int(diameter(g))))
    _emit_results(args, rows, ["k", "dimension", "witness", "nodes", "millis"])
    return 0


def cmd_info(args) -> int:
    g = load_graph(args)
    part = twin_partition(g)
    info = {
        "n": g.n,
        "m": g.edge_count(),
        "graph6": to_graph6(g),
        "degrees": {"min": g.min_degree(), "max": g.max_degree()},
        "connected": is_connected(g),
        "diameter": (int(diameter(g)) if is_connected(g) else None),
        "dimensionality": adjacency_dimensionality(g) if g.n >= 2 else None,
        "metric_dimensionality": (
            dimensionality(build_table(g, max(1, int(diameter(g)))))
            if g.n >= 2 and is_connected(g)
            else None
        ),
        "twin_classes": [
            {"vertices": cls.to_list(), "kind": kind}
            for cls, kind in zip(part.classes, part.kinds)
        ],
    }
    if args.format == "json":
        _emit(args, json.dumps(info, indent=2))
    else:
        lines = [f"{key}: {value}" for key, value in info.items()]
        _emit(args, "\n".join(lines))
    return 0


def cmd_formulas(args) -> int:
    params = tuple(int(p) for p in args.params.split(",") if p) if args.params else ()
    rows = []
    for k in parse_k_range(args.k):
        q = formulas_mod.FormulaQuery(args.family, params, k)
        rows.append({"family": args.family, "params": list(params), "k": k,
                     "value": formulas_mod.formula_adim(q)})
    _emit_results(args, rows, ["family", "params", "k", "value"])
    return 0


def cmd_bases(args) -> int:
    g = load_graph(args)
    bases = enumerate_bases(g, args.k, args.limit, args.budget, t=args.t)
    rows = [{"index": i, "basis": b.to_list()} for i, b in enumerate(bases)]
    if args.format == "json":
        _emit(args, json.dumps({"k": args.k, "count": len(bases),
                                "bases": [b.to_list() for b in bases]}, indent=2))
    else:
        _emit_results(args, rows, ["index", "basis"])
    return 0


def cmd_family(args) -> int:
    g = load_graph(args)
    report = families_mod.verify_family_theorem(
        g, args.k, args.limit, args.from_mask, args.to_mask
    )
    _emit(args, json.dumps(report.to_json_dict(), indent=2))
    return 0 if report.passed else 1


def _make_corpus(args) -> verify_mod.Corpus:
    if args.g6_file:
        return verify_mod.Corpus.from_file(
            args.g6_file,
            min_n=args.min_n,
            max_n=args.max_n,
            connected=args.connected,
            min_degree=args.min_degree,
        )
    return verify_mod.Corpus(
        min_n=args.min_n,
        max_n=args.max_n,
        connected=args.connected,
        min_degree=args.min_degree,
    )


def _violation_stream(args):
    if not args.violations:
        return None, None
    fh = open(args.violations, "w", encoding="utf-8")

    def stream(v):
        fh.write(json.dumps(v.to_json_dict()) + "\n")
        fh.flush()

    return stream, fh


def cmd_sweep(args) -> int:
    corpus = _make_corpus(args)
    stream, fh = _violation_stream(args)
    try:
        report = verify_mod.sweep_theorem(corpus, args.theorem, args.jobs, stream)
    finally:
        if fh:
            fh.close()
    _emit(args, json.dumps(report.to_json_dict(), indent=2))
    return 0 if report.passed else 1


def cmd_conjecture(args) -> int:
    corpus = _make_corpus(args)
    ks = parse_k_range(args.k)
    stream, fh = _violation_stream(args)
    try:
        report = verify_mod.check_cone_conjecture(corpus, ks, args.jobs, stream)
    finally:
        if fh:
            fh.close()
    _emit(args, json.dumps(report.to_json_dict(), indent=2))
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="adimlab",
        description="Exact k-adjacency and k-metric dimension computations.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="minimum k-generator at truncation level t")
    _add_source_flags(p)
    p.add_argument("--k", required=True, help="level or range, e.g. 2 or 1..3")
    p.add_argument("--t", type=int, default=2, help="truncation level (default 2)")
    _add_common_flags(p)
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("dim", help="minimum k-generator for the full metric")
    _add_source_flags(p)
    p.add_argument("--k", required=True, help="level or range")
    _add_common_flags(p)
    p.set_defaults(fn=cmd_dim)

    p = sub.add_parser("info", help="order, size, dimensionality, twin classes")
    _add_source_flags(p)
    _add_common_flags(p)
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("formulas", help="closed-form values (refuses out of range)")
    p.add_argument("--family", required=True, choices=formulas_mod.FAMILIES)
    p.add_argument("--params", default="", help="comma-separated, e.g. 7 or 2,3")
    p.add_argument("--k", required=True, help="level or range")
    _add_common_flags(p)
    p.set_defaults(fn=cmd_formulas)

    p = sub.add_parser("bases", help="every minimum k-generator")
    _add_source_flags(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--limit", type=int, default=None, help="abort beyond this many")
    _add_common_flags(p)
    p.set_defaults(fn=cmd_bases)

    p = sub.add_parser(
        "family", help="verify the shared-generator family of a minimum basis"
    )
    _add_source_flags(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--from-mask", type=int, default=0, dest="from_mask")
    p.add_argument("--to-mask", type=int, default=None, dest="to_mask")
    _add_common_flags(p)
    p.set_defaults(fn=cmd_family)

    for name, help_text in (
        ("sweep", "re-check one theorem over a corpus"),
        ("conjecture", "re-check the cone upper bound over a corpus"),
    ):
        p = sub.add_parser(name, help=help_text)
        if name == "sweep":
            p.add_argument("--theorem", required=True)
        else:
            p.add_argument("--k", default="1..4", help="levels, e.g. 1..4")
        p.add_argument("--min-n", type=int, default=2, dest="min_n")
        p.add_argument("--max-n", type=int, default=5, dest="max_n")
        p.add_argument("--connected", action="store_true")
        p.add_argument("--min-degree", type=int, default=0, dest="min_degree")
        p.add_argument("--g6-file", default=None, dest="g6_file")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument(
            "--violations", default=None, help="stream violations here as NDJSON"
        )
        _add_common_flags(p)
        p.set_defaults(fn=cmd_sweep if name == "sweep" else cmd_conjecture)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except AdimlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
