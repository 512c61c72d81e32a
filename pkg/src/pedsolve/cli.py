"""Batch command-line front end.

Commands read one graph from a file argument or stdin (except ``gen``).
Reports are line-oriented ``key: value`` text; ``--machine`` switches to
one JSON record per result.  Exit codes: 0 success, 2 parse error,
3 not P6-free, 4 oracle bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .coloring import classify_ped, is_ped, parse_edge_subset
from .errors import GraphParseError, NotP6FreeError, OracleBoundError
from .gadget import attach_gadget, is_nsf, verify_reduction
from .gen import generate_p6_free
from .graph import EdgeWeightMap, Graph, format_graph, parse_graph
from .oracle import DEFAULT_ORACLE_BOUND, is_p6_free, oracle_solve
from .solver import count_dims, solve
from .structure import CompleteBipartite, Cycle, find_dominating_structure


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _read_weights(path: str, g: Graph) -> EdgeWeightMap:
    weights = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise GraphParseError(
                    f"{path}:{lineno}: expected 'u v p/q', got {line!r}"
                )
            try:
                u, v = int(parts[0]), int(parts[1])
                val = Fraction(parts[2])
            except (ValueError, ZeroDivisionError):
                raise GraphParseError(f"{path}:{lineno}: bad weight line {line!r}")
            weights[(u, v)] = val
    try:
        return EdgeWeightMap(g, weights)
    except ValueError as exc:
        raise GraphParseError(str(exc))


def _edges_str(edges) -> str:
    return " ".join(f"{u}-{v}" for u, v in sorted(edges))


def _emit(report: dict, machine: bool) -> None:
    if machine:
        print(json.dumps(report, default=str, sort_keys=True))
    else:
        for key, value in report.items():
            if isinstance(value, (list, tuple)):
                value = " ".join(str(x) for x in value)
            print(f"{key}: {value}")


def _cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    w = _read_weights(args.weights, g) if args.weights else None
    result = solve(g, w)
    report = {
        "n": g.n,
        "m": g.m,
        "min_size": result.min_size,
        "min_weight": str(result.min_weight),
        "ped_count": result.ped_count,
        "dim_count": result.dim_count,
        "class": result.ped_class.value,
        "oracle_fallback": result.oracle_fallback,
        "min_ped": sorted(result.min_ped) if args.machine
        else _edges_str(result.min_ped),
    }
    _emit(report, args.machine)
    return 0


def _cmd_count(args) -> int:
    g = _read_graph(args.graph)
    w = _read_weights(args.weights, g) if args.weights else None
    result = solve(g, w)
    _emit({"ped_count": result.ped_count}, args.machine)
    return 0


def _cmd_count_dims(args) -> int:
    g = _read_graph(args.graph)
    w = _read_weights(args.weights, g) if args.weights else None
    count, best = count_dims(g, w)
    report = {"dim_count": count}
    if best is not None:
        report["min_dim"] = sorted(best) if args.machine else _edges_str(best)
    _emit(report, args.machine)
    return 0


def _cmd_oracle(args) -> int:
    g = _read_graph(args.graph)
    w = _read_weights(args.weights, g) if args.weights else None
    rep = oracle_solve(g, w, max_n=args.max_oracle)
    report = {
        "ped_count": rep.ped_count,
        "dim_count": rep.dim_count,
        "min_size": rep.min_size,
        "min_ped": sorted(rep.min_ped) if args.machine
        else _edges_str(rep.min_ped),
    }
    if rep.min_weight is not None:
        report["min_weight"] = str(rep.min_weight)
    _emit(report, args.machine)
    return 0


def _cmd_structure(args) -> int:
    g = _read_graph(args.graph)
    structure = find_dominating_structure(g)
    if isinstance(structure, Cycle):
        report = {"kind": "cycle", "vertices": list(structure.vertices)}
    else:
        assert isinstance(structure, CompleteBipartite)
        report = {
            "kind": "complete-bipartite",
            "r_side": sorted(structure.r_side),
            "s_side": sorted(structure.s_side),
        }
    _emit(report, args.machine)
    return 0


def _cmd_check_p6free(args) -> int:
    g = _read_graph(args.graph)
    free, witness = is_p6_free(g)
    report = {"p6_free": free}
    if witness is not None:
        report["witness"] = list(witness)
    _emit(report, args.machine)
    return 0


def _cmd_gen(args) -> int:
    g = generate_p6_free(args.n, args.seed)
    sys.stdout.write(
        format_graph(g, header=f"gen n={args.n} seed={args.seed}")
    )
    return 0


def _cmd_reduce(args) -> int:
    g = _read_graph(args.graph)
    nsf, witness = is_nsf(g)
    if not nsf:
        print(f"error: input is not an NSF graph (vertex {witness})",
              file=sys.stderr)
        return 2
    anchor = max(range(g.n), key=lambda v: (g.degree(v), -v))
    gp = attach_gadget(g, anchor)
    sys.stdout.write(format_graph(gp, header=f"gadget anchor={anchor}"))
    return 0


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    with open(args.ped, "r", encoding="utf-8") as fh:
        subset = parse_edge_subset(fh.read(), g)
    ok = is_ped(g, subset)
    report = {"is_ped": ok}
    if ok:
        report["class"] = classify_ped(g, subset).value
    _emit(report, args.machine)
    return 0


def _cmd_verify_reduction(args) -> int:
    g = _read_graph(args.graph)
    rep = verify_reduction(g, max_n=args.max_oracle)
    _emit(
        {
            "anchor": rep.anchor,
            "host_has_dim": rep.host_has_dim,
            "gadget_graph_dimless": rep.gadget_graph_dimless,
            "equivalence_holds": rep.equivalence_holds,
            "forced_edges_in_every_ped": rep.forced_edges_in_every_ped,
            "ok": rep.ok,
        },
        args.machine,
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pedsolve",
        description="Exact perfect edge domination on P6-free graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, graph=True, weights=False, needs_bound=False):
        p = sub.add_parser(name)
        if graph:
            p.add_argument("graph", nargs="?", default="-",
                           help="edge-list file (default: stdin)")
        if weights:
            p.add_argument("--weights", help="weight file, one 'u v p/q' per edge")
        if needs_bound:
            p.add_argument("--max-oracle", type=int,
                           default=DEFAULT_ORACLE_BOUND)
        p.add_argument("--machine", action="store_true",
                       help="emit one JSON record per result")
        p.set_defaults(fn=fn)
        return p

    add("solve", _cmd_solve, weights=True)
    add("count", _cmd_count, weights=True)
    add("count-dims", _cmd_count_dims, weights=True)
    add("oracle", _cmd_oracle, weights=True, needs_bound=True)
    add("structure", _cmd_structure)
    add("check-p6free", _cmd_check_p6free)
    gen = add("gen", _cmd_gen, graph=False)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    add("reduce", _cmd_reduce)
    verify = add("verify", _cmd_verify)
    verify.add_argument("--ped", required=True,
                        help="edge subset file, one 'u v' per line")
    add("verify-reduction", _cmd_verify_reduction, needs_bound=True)
    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotP6FreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OracleBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
