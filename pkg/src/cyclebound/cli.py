"""Command-line surface: compute, verify, search, gen.

Exit codes: 0 clean, 1 at least one Counterexample (verify only), 2 bad
input (parse failure, unreadable file, unknown family, resource cap).
Worker count for verify comes from --workers or the CYCLEBOUND_WORKERS
environment variable.  Timing goes to stderr so stdout stays byte-stable.
"""

from __future__ import annotations

import argparse
import os
import sys

from .graphs import Graph6Error, GraphError, complete, complete_bipartite, cycle_graph, encode_graph6, min_degree, petersen, random_gnp, parse_graph6
from .invariants import ResourceLimitError, circumference, is_hamiltonian, toughness, vertex_connectivity
from .graphs import is_petersen
from .surgery import SearchLimits, heuristic_longest_cycle
from .verifier import DEFAULT_THEOREMS, THEOREMS, batch_verify, render_table


def _read_graph6_arg(arg: str) -> str:
    if arg == "-":
        for line in sys.stdin:
            line = line.strip()
            if line:
                return line
        raise GraphError("no graph6 line on standard input")
    return arg


def cmd_compute(args) -> int:
    g6 = _read_graph6_arg(args.graph6)
    g = parse_graph6(g6)
    tau = toughness(g)
    c, _ = circumference(g)
    delta = min_degree(g) if g.n else 0
    fields = [
        f"n={g.n}",
        f"m={g.m}",
        f"δ={delta}",
        f"κ={vertex_connectivity(g) if g.n else 0}",
        f"τ={tau}",
        f"c={c}",
        f"hamiltonian={'true' if is_hamiltonian(g) else 'false'}",
        f"petersen={'true' if is_petersen(g) else 'false'}",
    ]
    print(" ".join(fields))
    return 0


def _worker_count(args) -> int:
    if args.workers is not None:
        return max(1, args.workers)
    raw = os.environ.get("CYCLEBOUND_WORKERS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def cmd_verify(args) -> int:
    theorems = tuple(t.strip() for t in args.theorems.split(",") if t.strip())
    unknown = [t for t in theorems if t not in THEOREMS]
    if unknown:
        print(f"unknown theorem selection: {', '.join(unknown)}", file=sys.stderr)
        return 2
    if args.input == "-":
        lines = sys.stdin.readlines()
        source = "<stdin>"
    else:
        try:
            with open(args.input, encoding="ascii") as fh:
                lines = fh.readlines()
        except OSError as exc:
            print(f"cannot read {args.input}: {exc}", file=sys.stderr)
            return 2
        source = args.input
    report = batch_verify(lines, theorems=theorems, workers=_worker_count(args), source=source)
    if args.format == "records":
        for rec in report.records:
            print(rec)
    else:
        print(render_table(report, timing=False))
    print(f"elapsed: {report.elapsed:.2f}s", file=sys.stderr)
    return 1 if report.counterexamples else 0


def cmd_search(args) -> int:
    g = parse_graph6(_read_graph6_arg(args.graph6))
    limits = SearchLimits(restarts=args.restarts)
    cyc = heuristic_longest_cycle(g, seed=args.seed, limits=limits)
    if cyc is None:
        print("acyclic")
        return 0
    print(f"length={cyc.length} cycle={','.join(str(v) for v in cyc.verts)}")
    if args.exact:
        c, _ = circumference(g)
        marker = "MATCH" if cyc.length == c else "GAP"
        print(f"exact={c} {marker}")
    return 0


def cmd_gen(args) -> int:
    fam = args.family
    p = args.params
    count = max(1, args.count)

    def need(k: int) -> list[str]:
        if len(p) != k:
            raise GraphError(f"family {fam} takes {k} parameter(s), got {len(p)}")
        return p

    graphs = []
    if fam == "complete":
        (n,) = need(1)
        graphs = [complete(int(n))] * count
    elif fam == "cycle":
        (n,) = need(1)
        graphs = [cycle_graph(int(n))] * count
    elif fam == "bipartite":
        a, b = need(2)
        graphs = [complete_bipartite(int(a), int(b))] * count
    elif fam == "petersen":
        need(0)
        graphs = [petersen()] * count
    else:  # gnp
        n, prob = need(2)
        graphs = [random_gnp(int(n), float(prob), seed=args.seed + i) for i in range(count)]
    for g in graphs:
        print(encode_graph6(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclebound",
        description="exact toughness/connectivity/circumference toolkit with cycle surgery",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="print invariants for one graph")
    p_compute.add_argument("graph6", help="graph6 string, or - for stdin")
    p_compute.set_defaults(func=cmd_compute)

    p_verify = sub.add_parser("verify", help="sweep a graph6 corpus against the theorems")
    p_verify.add_argument("input", help="file of graph6 lines, or - for stdin")
    p_verify.add_argument("--theorems", default=",".join(DEFAULT_THEOREMS),
                          help=f"comma list from {{{','.join(THEOREMS)}}}")
    p_verify.add_argument("--format", choices=("table", "records"), default="table")
    p_verify.add_argument("--workers", type=int, default=None,
                          help="process count (default: CYCLEBOUND_WORKERS or 1)")
    p_verify.set_defaults(func=cmd_verify)

    p_search = sub.add_parser("search", help="heuristic longest cycle")
    p_search.add_argument("graph6", help="graph6 string, or - for stdin")
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--restarts", type=int, default=SearchLimits().restarts)
    p_search.add_argument("--exact", action="store_true",
                          help="also compute the exact circumference and compare")
    p_search.set_defaults(func=cmd_search)

    p_gen = sub.add_parser("gen", help="emit generator families as graph6 lines")
    p_gen.add_argument("family", choices=("complete", "cycle", "bipartite", "petersen", "gnp"))
    p_gen.add_argument("params", nargs="*", help="family parameters, e.g. gnp 10 0.5")
    p_gen.add_argument("--count", type=int, default=1)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"graph6 parse error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 2
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
