"""Command-line front end.

Commands: search (run one search), certify (recognize an ordering),
multisweep (iterated sweeps plus optional recognition check), hierarchy
(extension report), witness (label-pair witness graph).  Exit codes are 0
for accept/success, 1 for reject, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .certify import check_lbfs, check_ldfs, recognize
from .engine import run_with_trace, tbls_run
from .fastengine import TotalityViolation, tbls_fast
from .graph import Graph, ParseError, VertexOrdering, parse_graph, parse_ordering
from .hierarchy import verify_hierarchy, witness_graph
from .multisweep import is_cocomp_ordering, is_unit_interval_ordering, run_search, sweep_sequence
from .orders import VALID_TOKENS, parse_order_token


class _UsageError(Exception):
    pass


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise _UsageError(f"cannot read graph file {path!r}: {exc}") from None
    except ParseError as exc:
        raise _UsageError(f"graph file {path!r}: {exc}") from None


def _load_ordering(spec: str, n: int, what: str = "ordering") -> VertexOrdering:
    """Resolve 'identity', a file path, or an inline permutation literal."""
    if spec == "identity":
        return VertexOrdering.identity(n)
    text = spec
    if os.path.exists(spec):
        try:
            with open(spec, "r", encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise _UsageError(f"cannot read {what} file {spec!r}: {exc}") from None
    try:
        return parse_ordering(text, n)
    except ParseError as exc:
        raise _UsageError(f"{what} {spec!r}: {exc}") from None


def _order_from_token(token: str):
    try:
        return parse_order_token(token)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _cmd_search(args) -> int:
    graph = _load_graph(args.graph)
    order = _order_from_token(args.order)
    tau = _load_ordering(args.tau, graph.n, "tie-break")
    if args.trace:
        sigma, steps = run_with_trace(graph, order, tau)
        for step in steps:
            labels = {str(v): list(l) for v, l in step["labels"].items()}
            print(json.dumps({**step, "labels": labels}))
    elif args.engine == "fast":
        try:
            sigma = tbls_fast(graph, order, tau)
        except TotalityViolation as exc:
            print(f"warning: {exc}; falling back to the reference engine", file=sys.stderr)
            sigma = tbls_run(graph, order, tau)
    else:
        sigma = run_search(graph, order, tau, engine=args.engine)
    print(sigma)
    return 0


def _cmd_certify(args) -> int:
    graph = _load_graph(args.graph)
    order = _order_from_token(args.order)
    sigma = _load_ordering(args.ordering, graph.n)
    try:
        if order.id in ("lbfs", "ldfs") and (args.full_table or args.no_table):
            checker = check_lbfs if order.id == "lbfs" else check_ldfs
            cert = checker(graph, sigma, keep_table=args.full_table, streaming=args.no_table)
            method = order.id + "-certifier"
        else:
            cert, method = recognize(graph, order, sigma)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    payload = cert.to_json_dict()
    payload["method"] = method
    if "details" in payload and "table" in payload.get("details", {}):
        payload["details"]["table"] = {
            f"{b},{c}": (entry if isinstance(entry, (str, type(None))) else int(entry))
            for (b, c), entry in payload["details"]["table"].items()
        }
    print(json.dumps(payload))
    return 0 if cert.accepted else 1


def _cmd_multisweep(args) -> int:
    graph = _load_graph(args.graph)
    order = _order_from_token(args.order)
    sigma0 = _load_ordering(args.seed_ordering, graph.n, "seed ordering")
    sweeps = graph.n if args.sweeps == "n" else int(args.sweeps)
    if sweeps < 0:
        raise _UsageError("sweep count must be nonnegative")
    trace = sweep_sequence(graph, order, sigma0, sweeps, engine=args.engine)
    for i, sigma in enumerate(trace.orderings):
        print(json.dumps({"sweep": i, "ordering": list(sigma.order)}))
    if args.check is None:
        return 0
    validator = is_unit_interval_ordering if args.check == "unit-interval" else is_cocomp_ordering
    cert = validator(graph, trace.final)
    print(json.dumps({"check": args.check, "certificate": cert.to_json_dict()}))
    return 0 if cert.accepted else 1


def _cmd_hierarchy(args) -> int:
    corpus = None
    if args.corpus:
        try:
            with open(args.corpus, "r", encoding="ascii") as fh:
                chunks = [c for c in fh.read().split("\n\n") if c.strip()]
            corpus = [parse_graph(c) for c in chunks]
        except (OSError, ParseError) as exc:
            raise _UsageError(f"corpus file {args.corpus!r}: {exc}") from None
    report = verify_hierarchy(args.max_label, corpus)
    if args.format == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        print(f"label universe: 1..{report.universe}")
        print("arcs (strict extensions, transitive reduction):")
        for s, sp in sorted(report.arcs):
            print(f"  {s} -> {sp}")
        print("implied by transitivity:")
        for s, sp in sorted(report.transitive_extensions):
            print(f"  {s} -> {sp}")
        print("non-extensions with label witnesses:")
        for (s, sp), (a, b) in sorted(report.non_arcs.items()):
            print(f"  {s} -/-> {sp}: A={set(a) or '{}'} B={set(b) or '{}'}")
        print(f"ordering-level spot check: {'ok' if report.ordering_spot_ok else 'FAILED'}")
    return 0 if report.ordering_spot_ok else 1


def _parse_label_literal(text: str):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(sorted({int(tok) for tok in text.replace(",", " ").split()}))
    except ValueError:
        raise _UsageError(f"label set literal {text!r} must be whitespace- or comma-separated integers")


def _cmd_witness(args) -> int:
    order = _order_from_token(args.order)
    a = _parse_label_literal(args.A)
    b = _parse_label_literal(args.B)
    try:
        graph, sigma = witness_graph(order, a, b, args.p)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    graph_text = graph.to_text()
    ordering_text = str(sigma) + "\n"
    if args.out:
        with open(args.out + ".graph", "w", encoding="ascii") as fh:
            fh.write(graph_text)
        with open(args.out + ".ordering", "w", encoding="ascii") as fh:
            fh.write(ordering_text)
        print(f"wrote {args.out}.graph and {args.out}.ordering")
    else:
        sys.stdout.write(graph_text)
        sys.stdout.write(ordering_text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="labelsearch",
        description="Run, certify, and compose label-order graph searches.",
    )
    parser.add_argument("--version", action="version", version=f"labelsearch {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="run one search and print the visiting order")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--order", required=True, help=f"one of: {VALID_TOKENS}")
    p.add_argument("--tau", default="identity", help="tie-break: 'identity', a file, or inline ints")
    p.add_argument("--engine", choices=["auto", "ref", "fast"], default="auto")
    p.add_argument("--trace", action="store_true", help="print per-step eligible sets and labels")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("certify", help="decide whether an ordering belongs to a search")
    p.add_argument("--graph", required=True)
    p.add_argument("--order", required=True, help=f"one of: {VALID_TOKENS}")
    p.add_argument("--ordering", required=True, help="ordering file or inline ints")
    p.add_argument("--full-table", action="store_true", help="keep the lex pair table (debug, quadratic)")
    p.add_argument("--no-table", action="store_true", help="table-free lex check for large graphs")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("multisweep", help="iterate a search, tie-breaking by the reversed previous sweep")
    p.add_argument("--graph", required=True)
    p.add_argument("--order", default="lbfs", help=f"one of: {VALID_TOKENS}")
    p.add_argument("--sweeps", default="3", help="sweep count, or 'n' for one per vertex")
    p.add_argument("--check", choices=["unit-interval", "cocomp"], default=None)
    p.add_argument("--seed-ordering", default="identity", help="sigma_0: 'identity', a file, or inline ints")
    p.add_argument("--engine", choices=["auto", "ref", "fast"], default="auto")
    p.set_defaults(func=_cmd_multisweep)

    p = sub.add_parser("hierarchy", help="verify the extension hierarchy of the seven searches")
    p.add_argument("--max-label", type=int, default=5, help="date universe bound for label checks")
    p.add_argument("--corpus", default=None, help="file of blank-line-separated edge lists")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_hierarchy)

    p = sub.add_parser("witness", help="build the graph exhibiting a non-dominated label pair")
    p.add_argument("--order", required=True, help=f"one of: {VALID_TOKENS}")
    p.add_argument("--A", required=True, help="label set literal, e.g. '1 3'")
    p.add_argument("--B", required=True, help="label set literal, e.g. '2'")
    p.add_argument("--p", type=int, required=True, help="number of vertices in the witness graph")
    p.add_argument("--out", default=None, help="path prefix for .graph/.ordering files")
    p.set_defaults(func=_cmd_witness)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help/--version
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
