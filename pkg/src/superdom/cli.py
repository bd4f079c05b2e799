"""Command-line interface: ``superdom <subcommand> ...``.

Graph arguments are a path to a graph6 / edge-list file, ``-`` for stdin, or
a literal graph6 string, so failure records from reports replay directly.
Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import formulas, harness, solvers
from .family_f import DisconnectedGraphError, construct_f, recognize
from .graph import Graph, GraphError, construct, emit_graph6, parse_graph6, read_graph
from .products import join, lex_product


class UsageError(Exception):
    pass


def load_graph(arg: str) -> Graph:
    if arg == "-":
        return read_graph(sys.stdin.read())
    if os.path.isfile(arg):
        with open(arg, encoding="ascii") as fh:
            return read_graph(fh.read())
    return parse_graph6(arg)


def _int_list(text: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def cmd_compute(args) -> int:
    g = load_graph(args.graph)
    fn = solvers.INVARIANTS[args.invariant]
    start = time.perf_counter()
    result = fn(g)
    elapsed = (time.perf_counter() - start) * 1000
    _dump({"name": result.name, "value": result.value, "witness": result.witness_json(), "elapsed_ms": round(elapsed, 3)})
    return 0


def cmd_construct(args) -> int:
    print(emit_graph6(construct(args.kind, args.params)))
    return 0


def cmd_product(args) -> int:
    g = load_graph(args.g)
    hs = [load_graph(h) for h in args.h]
    if args.op == "join":
        if len(hs) != 1:
            raise UsageError("join takes exactly two graphs")
        p = join(g, hs[0])
    else:
        p = lex_product(g, hs)
    print(emit_graph6(p.base))
    _dump({"n": p.base.n, "g_order": p.g_order, "h_orders": list(p.h_orders), "coordinates": p.coordinate_map()})
    return 0


def cmd_bounds(args) -> int:
    g, h = load_graph(args.g), load_graph(args.h)
    rep = formulas.bound_report(g, h, args.op, exact=not args.no_exact, graph_id=f"{args.g} {args.h}")
    _dump(rep.to_json())
    return 0 if rep.consistent() else 1


def cmd_family_f(args) -> int:
    if args.action == "recognize":
        if not args.graph:
            raise UsageError("family-f recognize needs a graph")
        dec = recognize(load_graph(args.graph))
        if dec is None:
            print("not-member")
        else:
            _dump(dec.to_json())
        return 0
    if args.cliques is None:
        raise UsageError("family-f construct needs --cliques")
    print(emit_graph6(construct_f(args.cliques, args.empties or [])))
    return 0


def cmd_reduce_alpha(args) -> int:
    g = load_graph(args.graph)
    trace = formulas.alpha_via_reduction(g)
    direct = solvers.alpha(g).value
    _dump(
        {
            "alpha": trace.alpha,
            "alpha_direct": direct,
            "t": trace.copies,
            "factor_order": trace.factor_order,
            "factor_gamma_sp": trace.factor_gamma_sp,
            "product_order": trace.product_order,
            "product_gamma_sp": trace.product_gamma_sp,
        }
    )
    return 0 if trace.alpha == direct else 1


def cmd_enumerate(args) -> int:
    out = sys.stdout
    for g in harness.iter_labeled(args.n, args.filter):
        out.write(emit_graph6(g) + "\n")
    return 0


def _corpus(args) -> harness.Corpus:
    if args.corpus:
        return harness.read_corpus(args.corpus, args.filter)
    if args.n is None:
        raise UsageError("give --n or --corpus")
    return harness.enumerate_labeled(args.n, args.filter, lo=args.min_n)


def _emit(checks, args) -> int:
    text = harness.report(checks, args.format, timing=not args.no_timing)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(c.passed for c in checks) else 1


def cmd_verify(args) -> int:
    ids = args.theorem
    unknown = [t for t in ids if t not in harness.THEOREMS]
    if unknown:
        raise UsageError(f"unknown theorem id(s): {', '.join(unknown)}")
    pair_ids = [t for t in ids if t in harness.PAIR_CHECKS]
    single_ids = [t for t in ids if t in harness.SINGLE_CHECKS]
    checks = []
    if single_ids:
        checks += harness.verify_many(single_ids, _corpus(args), args.workers)
    if pair_ids:
        top = args.n if args.n is not None else 3
        gs = harness.labeled_up_to(1, top, "all")
        checks += harness.product_sweep(gs, gs, pair_ids, args.cap, f"all G,H n,n'<={top}", args.workers)
    return _emit(checks, args)


def cmd_campaign(args) -> int:
    if not args.all:
        raise UsageError("campaign currently runs every statement; pass --all")
    return _emit(harness.campaign(args.max_n, args.workers), args)


def cmd_list_theorems(args) -> int:
    for tid, text in harness.THEOREMS.items():
        kind = "pair" if tid in harness.PAIR_CHECKS else "graph"
        print(f"{tid}\t{kind}\t{text}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superdom", description="Exact super domination numbers and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute one invariant with a witness")
    p.add_argument("invariant", choices=sorted(solvers.INVARIANTS))
    p.add_argument("graph")
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("construct", help="emit a named graph as graph6")
    p.add_argument("kind")
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("product", help="lexicographic product or join, with coordinates")
    p.add_argument("op", choices=["lex", "join"])
    p.add_argument("g")
    p.add_argument("h", nargs="+")
    p.set_defaults(fn=cmd_product)

    p = sub.add_parser("bounds", help="every applicable bound and formula for a product")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--op", choices=["lex", "join"], default="lex")
    p.add_argument("--no-exact", action="store_true", help="skip the exact solver run")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("family-f", help="recognize or construct members of the layered family")
    p.add_argument("action", choices=["recognize", "construct"])
    p.add_argument("graph", nargs="?")
    p.add_argument("--cliques", type=_int_list)
    p.add_argument("--empties", type=_int_list, default=[])
    p.set_defaults(fn=cmd_family_f)

    p = sub.add_parser("reduce-alpha", help="independence number through the product reduction")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_reduce_alpha)

    p = sub.add_parser("enumerate", help="all labeled graphs of one order as graph6")
    p.add_argument("n", type=int)
    p.add_argument("--filter", choices=harness.FILTERS, default="all")
    p.set_defaults(fn=cmd_enumerate)

    for name, fn, help_ in (
        ("verify", cmd_verify, "check statements over a corpus"),
        ("campaign", cmd_campaign, "check every statement over scaled corpora"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=["json", "csv", "markdown"], default="json")
        p.add_argument("--out")
        p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms for byte-stable output")
        p.add_argument("--workers", type=int)
        p.set_defaults(fn=fn)
    verify_p = sub.choices["verify"]
    verify_p.add_argument("theorem", nargs="+")
    verify_p.add_argument("--n", type=int)
    verify_p.add_argument("--min-n", type=int)
    verify_p.add_argument("--filter", choices=harness.FILTERS, default="all")
    verify_p.add_argument("--corpus", help="graph6 file, one graph per line")
    verify_p.add_argument("--cap", type=int, default=16)
    campaign_p = sub.choices["campaign"]
    campaign_p.add_argument("--all", action="store_true")
    campaign_p.add_argument("--max-n", type=int, default=6)

    p = sub.add_parser("list-theorems", help="statement ids and what each checks")
    p.set_defaults(fn=cmd_list_theorems)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, GraphError, DisconnectedGraphError, formulas.Inapplicable, harness.UnknownTheorem) as exc:
        print(f"superdom: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"superdom: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
