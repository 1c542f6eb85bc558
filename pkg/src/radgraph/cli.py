"""Command-line entry point: construct / analyze / bound / witness / search /
extract, with graph6, edge-list, DOT and JSON output.

Exit codes form a stable contract for scripting: 0 on success or a passing
check, 1 when a bound or witness validation fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import io as gio
from .bounds import cage_lower_bound, exact_radius_formula_g4, upper_bound_radius
from .constructions import (
    bipartite_radius2,
    box_graph,
    extract_dense_subgraph,
    glue_cycle,
    radius3_graph,
)
from .geometry import (
    projective_plane_incidence_graph,
    symplectic_quadrangle_incidence_graph,
)
from .graph import metric_summary
from .search import enumerate_extremal, stream_verify, verify_theorem_main_small
from .witness import (
    WitnessValidationError,
    check_witness_general,
    check_witness_triangle_free,
    check_witness_two_cycles,
    find_witness,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graph(path, fmt="graph6"):
    text = _read_text(path)
    if fmt == "edgelist":
        return gio.from_edgelist_text(text)
    return gio.from_graph6(text)


def _render_graph(G, fmt):
    if fmt == "graph6":
        return gio.graph6_bytes(G).decode("ascii") + "\n"
    if fmt == "edgelist":
        return gio.to_edgelist_text(G)
    if fmt == "dot":
        return gio.to_dot(G)
    raise ValueError(f"unknown output format {fmt!r}")


def _emit(text, output):
    if output and output != "-":
        with open(output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _metrics_dict(G):
    ms = metric_summary(G)
    girth = "infinite" if ms.girth == float("inf") else int(ms.girth)
    return {
        "n": G.n,
        "edge_count": G.edge_count,
        "radius": ms.radius,
        "diameter": ms.diameter,
        "girth": girth,
        "min_degree": ms.min_degree,
        "centers": list(ms.centers),
    }


def _num(value):
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else float(value)
    return value


def _print_json(obj, pretty=False):
    if pretty:
        sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _parse_vertex_set(text):
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex set {text!r}: expected e.g. 0,1,4,5")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="radgraph",
        description="Constructions, bounds and exhaustive checks for the maximum "
        "radius of connected graphs with degree and girth floors.",
    )
    parser.add_argument(
        "--seed", type=int, default=None,
        help="accepted for interface stability; every operation is deterministic",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named graph family member")
    kinds = p.add_subparsers(dest="kind", required=True)
    for name in ("box", "bipartite2", "radius3", "pg-plane", "gq", "glue"):
        k = kinds.add_parser(name)
        if name == "box":
            k.add_argument("--r", type=int, required=True)
            k.add_argument("--delta", type=int, required=True)
            k.add_argument("--c", type=int, default=0)
        elif name in ("bipartite2", "radius3"):
            k.add_argument("--n", type=int, required=True)
            k.add_argument("--delta", type=int, required=True)
        elif name in ("pg-plane", "gq"):
            k.add_argument("--q", type=int, required=True)
        else:  # glue
            k.add_argument("--base", required=True, help="graph6 file or - for stdin")
            k.add_argument("--m", type=int, required=True)
        k.add_argument("--format", choices=("graph6", "edgelist", "dot"), default="graph6")
        k.add_argument("--output", default="-")
        k.add_argument("--verify", action="store_true",
                       help="also print a JSON metric summary")
        k.add_argument("--pretty", action="store_true")

    p = sub.add_parser("analyze", help="metric summary of a graph as JSON")
    p.add_argument("--graph", required=True, help="graph file or - for stdin")
    p.add_argument("--input-format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("bound", help="all applicable radius bounds as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("witness", help="check or search witness sets")
    wsub = p.add_subparsers(dest="action", required=True)
    c = wsub.add_parser("check")
    c.add_argument("what", choices=("general", "tf", "cycles"))
    c.add_argument("--graph", required=True)
    c.add_argument("--input-format", choices=("graph6", "edgelist"), default="graph6")
    c.add_argument("--set", dest="vertex_set", type=_parse_vertex_set, required=True)
    c.add_argument("--k", type=int, default=None, help="half-girth (general)")
    c.add_argument("--r", type=int, default=None, help="cycle length (cycles)")
    c.add_argument("--pretty", action="store_true")
    f = wsub.add_parser("find")
    f.add_argument("--graph", required=True)
    f.add_argument("--input-format", choices=("graph6", "edgelist"), default="graph6")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--budget", type=int, default=10**6)
    f.add_argument("--jobs", type=int, default=None, help="accepted; search is sequential")
    f.add_argument("--pretty", action="store_true")

    p = sub.add_parser("search", help="exhaustive enumeration and stream checks")
    ssub = p.add_subparsers(dest="action", required=True)
    e = ssub.add_parser("enumerate")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--delta", type=int, required=True)
    e.add_argument("--g", type=int, default=4)
    e.add_argument("--long-run", action="store_true")
    e.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    e.add_argument("--pretty", action="store_true")
    v = ssub.add_parser("verify-theorem")
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--deltas", default="2,3", help="comma-separated degree floors")
    v.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    v.add_argument("--pretty", action="store_true")
    s = ssub.add_parser("stream")
    s.add_argument("--delta", type=int, required=True)
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--input", default="-", help="graph6 lines, file or - for stdin")
    s.add_argument("--pretty", action="store_true")

    p = sub.add_parser("extract", help="smallest dense ball along a central geodesic")
    p.add_argument("--graph", required=True)
    p.add_argument("--input-format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pretty", action="store_true")

    return parser


def _cmd_construct(args):
    if args.kind == "box":
        G = box_graph(args.r, args.delta, args.c)
    elif args.kind == "bipartite2":
        G = bipartite_radius2(args.n, args.delta)
    elif args.kind == "radius3":
        G = radius3_graph(args.n, args.delta)
    elif args.kind == "pg-plane":
        G = projective_plane_incidence_graph(args.q)
    elif args.kind == "gq":
        G = symplectic_quadrangle_incidence_graph(args.q)
    else:
        base = _load_graph(args.base)
        G = glue_cycle(base, args.m)
    _emit(_render_graph(G, args.format), args.output)
    if args.verify:
        _print_json(_metrics_dict(G), args.pretty)
    return EXIT_OK


def _cmd_analyze(args):
    G = _load_graph(args.graph, args.input_format)
    _print_json(_metrics_dict(G), args.pretty)
    return EXIT_OK


def _cmd_bound(args):
    out = {}
    if args.g == 4:
        exact = exact_radius_formula_g4(args.n, args.delta)
        out["exact"] = "nonexistent" if exact is None else exact
    if args.g % 2 == 0 and args.g >= 4:
        out["upper"] = _num(upper_bound_radius(args.n, args.delta, args.g))
    if args.g in (6, 8, 12):
        out["cage_lower"] = _num(cage_lower_bound(args.n, args.delta, args.g))
    _print_json(out, args.pretty)
    return EXIT_OK


def _cmd_witness(args):
    G = _load_graph(args.graph, args.input_format)
    if args.action == "find":
        ws = find_witness(G, args.k, budget=args.budget)
        report = check_witness_general(G, ws.vertices, args.k)
        _print_json(report.to_json_dict(), args.pretty)
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED
    try:
        if args.what == "general":
            if args.k is None:
                raise ValueError("--k is required for the general check")
            report = check_witness_general(G, args.vertex_set, args.k)
        elif args.what == "tf":
            report = check_witness_triangle_free(G, args.vertex_set)
        else:
            if args.r is None:
                raise ValueError("--r is required for the cycles check")
            report = check_witness_two_cycles(G, args.vertex_set, args.r)
    except WitnessValidationError as exc:
        _print_json({"kind": f"witness-{args.what}", "error": str(exc),
                     "pair": list(exc.pair) if exc.pair else None, "pass": False},
                    args.pretty)
        return EXIT_CHECK_FAILED
    _print_json(report.to_json_dict(), args.pretty)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_search(args):
    if args.action == "enumerate":
        result = enumerate_extremal(
            args.n, args.delta, args.g, allow_long=args.long_run, jobs=args.jobs
        )
        payload = {
            "n": result.n,
            "delta": result.delta,
            "g": result.g,
            "max_radius": result.max_radius,
            "witness": (
                gio.graph6_bytes(result.extremal_witness).decode("ascii")
                if result.extremal_witness
                else None
            ),
            "graphs_considered": result.graphs_considered,
        }
        _print_json(payload, args.pretty)
        return EXIT_OK
    if args.action == "verify-theorem":
        deltas = [int(tok) for tok in args.deltas.split(",") if tok]
        table = verify_theorem_main_small(args.n_max, deltas, jobs=args.jobs)
        _print_json(table, args.pretty)
        return EXIT_OK if table["all_equal"] else EXIT_CHECK_FAILED
    lines = _read_text(args.input).splitlines()
    report = stream_verify(lines, args.delta, args.g)
    _print_json(report, args.pretty)
    return EXIT_OK if not report["bound_violations"] else EXIT_CHECK_FAILED


def _cmd_extract(args):
    G = _load_graph(args.graph, args.input_format)
    res = extract_dense_subgraph(G, args.k)
    payload = {
        "center": res.center,
        "geodesic": list(res.geodesic),
        "chosen_index": res.chosen_index,
        "subgraph": gio.graph6_bytes(res.subgraph).decode("ascii"),
        "subgraph_n": res.subgraph.n,
        "subgraph_edges": res.subgraph.edge_count,
        "vertex_map": list(res.vertex_map),
        "vertex_bound": res.vertex_bound,
        "edge_bound": res.edge_bound,
    }
    _print_json(payload, args.pretty)
    ok = res.subgraph.n <= res.vertex_bound and res.subgraph.edge_count >= res.edge_bound
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "construct": _cmd_construct,
        "analyze": _cmd_analyze,
        "bound": _cmd_bound,
        "witness": _cmd_witness,
        "search": _cmd_search,
        "extract": _cmd_extract,
    }
    try:
        return handlers[args.command](args)
    except WitnessValidationError as exc:
        sys.stderr.write(f"check failed: {exc}\n")
        return EXIT_CHECK_FAILED
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
