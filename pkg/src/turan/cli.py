"""Command-line driver.

Subcommands mirror the library surface: construct/encode/decode for graph
plumbing, count for copy counting, ex / min-copies / classify for the
exhaustive searches, witness-search for the annealer, and verify-paper
for the claim catalog.  Graphs are accepted as construction specs
("g5:p=4", "circulant:n=6,s=1+3"), graph6 literals, or .g6 files; witness
sets are written as .g6 files, one graph per line.

Exit codes: 0 success, 1 runtime failure or failed verification,
2 usage error (argparse), 3 task refused by the feasibility envelope.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .anneal import DEFAULT_BUDGET, SearchBudget, search_min_copies
from .build import parse_construction
from .claims import verify_paper
from .counting import count_copies, single_pattern
from .errors import Graph6Error, GraphError, InfeasibleTaskError
from .graphs import Graph, graph6_decode, graph6_encode, read_graph6_file
from .search import classify_record, min_copies, turan_number

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 3


def _read_graphs(text: str) -> list[Graph]:
    """A construction spec, a graph6 literal, or a .g6 file path."""
    if text.endswith(".g6") or os.path.exists(text):
        return read_graph6_file(text)
    try:
        return [parse_construction(text)]
    except GraphError:
        pass
    try:
        return [graph6_decode(text)]
    except Graph6Error:
        raise GraphError(
            f"cannot read {text!r} as a construction spec, graph6 string, "
            f"or .g6 file") from None


def _read_one_graph(text: str) -> Graph:
    graphs = _read_graphs(text)
    if len(graphs) != 1:
        raise GraphError(f"{text!r} holds {len(graphs)} graphs, expected one")
    return graphs[0]


def _parse_budget(text: str, seed: int | None) -> SearchBudget:
    """Budget specs like 'restarts=20,steps=200000,t0=1.5,decay=0.99997'."""
    fields = {
        "restarts": ("restarts", int),
        "steps": ("max_steps", int),
        "max_steps": ("max_steps", int),
        "t0": ("t_initial", float),
        "t_initial": ("t_initial", float),
        "decay": ("t_decay", float),
        "t_decay": ("t_decay", float),
        "seed": ("seed", int),
    }
    kwargs = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        key, eq, value = part.partition("=")
        if not eq or key.strip() not in fields:
            raise GraphError(f"bad budget field {part!r}; known fields: "
                             f"{', '.join(sorted(fields))}")
        name, cast = fields[key.strip()]
        kwargs[name] = cast(value.strip())
    if seed is not None:
        kwargs["seed"] = seed
    return SearchBudget(**kwargs)


def _write_witnesses(path: str, labels) -> None:
    with open(path, "w") as fh:
        for label in labels:
            fh.write(label + "\n")


def _emit(args, record: dict, human: str) -> None:
    if args.json:
        json.dump(record, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(human)


def _cmd_construct(args) -> int:
    g = parse_construction(args.spec)
    label = graph6_encode(g)
    if args.out:
        _write_witnesses(args.out, [label])
    _emit(args, {
        "task": "construct",
        "spec": args.spec,
        "graph6": label,
        "order": g.n,
        "size": g.size,
        "degree_sequence": list(g.degree_sequence()),
    }, f"{label}  (order {g.n}, size {g.size})")
    return EXIT_OK


def _cmd_encode(args) -> int:
    for g in _read_graphs(args.graph):
        print(graph6_encode(g))
    return EXIT_OK


def _cmd_decode(args) -> int:
    records = []
    for g in _read_graphs(args.graph):
        records.append({
            "order": g.n,
            "size": g.size,
            "degree_sequence": list(g.degree_sequence()),
            "edges": [list(e) for e in g.edges()],
        })
    if args.json:
        json.dump(records if len(records) > 1 else records[0], sys.stdout,
                  indent=2)
        sys.stdout.write("\n")
    else:
        for rec in records:
            edges = " ".join(f"{u}-{v}" for u, v in rec["edges"])
            print(f"order {rec['order']}, size {rec['size']}: {edges}")
    return EXIT_OK


def _cmd_count(args) -> int:
    pattern = single_pattern(args.pattern)
    graphs = _read_graphs(args.graph)
    counts = [count_copies(g, pattern) for g in graphs]
    if args.json:
        records = [{"task": "count", "pattern": args.pattern,
                    "value": c.value, "method": c.method} for c in counts]
        json.dump(records if len(records) > 1 else records[0], sys.stdout,
                  indent=2)
        sys.stdout.write("\n")
    else:
        for c in counts:
            print(c.value)
    return EXIT_OK


def _cmd_ex(args) -> int:
    res = turan_number(args.n, args.pattern, allow_long=args.override_envelope,
                       force=args.override_envelope, jobs=args.jobs)
    if args.out:
        _write_witnesses(args.out, res.extremal)
    _emit(args, {
        "task": "ex",
        "order": res.order,
        "patterns": [p.name for p in res.patterns],
        "value": res.ex_value,
        "witnesses": list(res.extremal),
        "classes_visited": res.classes_visited,
        "method": res.method,
        "runtime_ms": res.runtime_ms,
    }, f"ex({args.n}, {args.pattern}) = {res.ex_value}   "
       f"[{len(res.extremal)} extremal classes, "
       f"{res.classes_visited} classes visited]")
    return EXIT_OK


def _cmd_min_copies(args) -> int:
    res = min_copies(args.n, args.e, args.pattern,
                     allow_long=args.override_envelope,
                     force=args.override_envelope, jobs=args.jobs)
    if args.out:
        _write_witnesses(args.out, res.witnesses)
    _emit(args, {
        "task": "min-copies",
        "order": res.order,
        "size": res.size,
        "pattern": res.pattern.name,
        "value": res.min_copies,
        "witnesses": list(res.witnesses),
        "classes_visited": res.classes_visited,
        "method": res.method,
        "runtime_ms": res.runtime_ms,
    }, f"min copies of {args.pattern} at order {args.n}, size {args.e}: "
       f"{res.min_copies}   [{len(res.witnesses)} attaining classes]")
    return EXIT_OK


def _cmd_classify(args) -> int:
    res = classify_record(args.n, args.e, args.pattern, args.copies,
                          allow_long=args.override_envelope,
                          force=args.override_envelope)
    if args.out:
        _write_witnesses(args.out, res.witnesses)
    _emit(args, {
        "task": "classify",
        "order": res.order,
        "size": res.size,
        "pattern": res.pattern.name,
        "copies": res.copies,
        "value": len(res.witnesses),
        "witnesses": list(res.witnesses),
        "classes_visited": res.classes_visited,
        "method": res.method,
        "runtime_ms": res.runtime_ms,
    }, f"classes at order {args.n}, size {args.e} with exactly {args.copies} "
       f"copies of {args.pattern}: {len(res.witnesses)}")
    return EXIT_OK


def _cmd_witness_search(args) -> int:
    budget = DEFAULT_BUDGET
    if args.budget:
        budget = _parse_budget(args.budget, args.seed)
    elif args.seed is not None:
        budget = SearchBudget(seed=args.seed)
    seed_graph = _read_one_graph(args.seed_graph) if args.seed_graph else None
    res = search_min_copies(args.n, args.e, args.pattern, budget,
                            seed_graph=seed_graph, stop_at=args.stop_at,
                            jobs=args.jobs)
    if args.out:
        _write_witnesses(args.out, res.witnesses)
    _emit(args, {
        "task": "witness-search",
        "order": res.order,
        "size": res.size,
        "pattern": res.pattern.name,
        "value": res.min_copies,
        "witnesses": list(res.witnesses),
        "method": res.method,
        "runtime_ms": res.runtime_ms,
    }, f"best found: {res.min_copies} copies of {args.pattern} at order "
       f"{args.n}, size {args.e}   [{len(res.witnesses)} graphs, upper "
       f"bound only]")
    return EXIT_OK


def _cmd_verify_paper(args) -> int:
    report = verify_paper(args.scope, jobs=args.jobs)
    if args.json:
        json.dump(report.as_dict(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        width = max(len(c.claim.id) for c in report.claims)
        for c in report.claims:
            mark = {"pass": "ok", "fail": "FAIL", "skipped": "skip"}[c.verdict]
            line = f"{c.claim.id:<{width}}  {mark:<4}  {c.claim.provenance}"
            if c.verdict == "fail":
                line += f"  ({c.detail})"
            print(line)
        s = report.summary
        print(f"\n{s['pass']} passed, {s['fail']} failed, "
              f"{s['skipped']} skipped ({report.scope} scope, "
              f"{report.runtime_ms / 1000.0:.1f}s)")
    return EXIT_OK if report.ok else EXIT_ERROR


def _add_common(sub, *, jobs=True, out=False, envelope=False) -> None:
    sub.add_argument("--json", action="store_true",
                     help="emit a JSON record instead of text")
    if jobs:
        sub.add_argument("--jobs", type=int, default=1, metavar="N",
                         help="worker processes for the search (default 1)")
    if out:
        sub.add_argument("--out", metavar="FILE",
                         help="write witnesses to FILE, one graph6 per line")
    if envelope:
        sub.add_argument("--override-envelope", action="store_true",
                         help="run tasks the feasibility envelope refuses")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turan",
        description="Exact search and verification workbench for small "
                    "Turan-type problems.",
        epilog="Pattern specs: k:N complete, s:P star with P leaves, "
               "b:P book with P pages, c4, p:N path, triangle aliases "
               "c3/k3, and family:c3,p4,k13 for the three-pattern family.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named construction")
    p.add_argument("spec", help="construction spec, e.g. g5:p=4")
    _add_common(p, jobs=False, out=True)
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("encode", help="print graphs as graph6")
    p.add_argument("graph", help="construction spec or .g6 file")
    p.set_defaults(fn=_cmd_encode, json=False)

    p = sub.add_parser("decode", help="print order, size, and edges")
    p.add_argument("graph", help="graph6 string or .g6 file")
    _add_common(p, jobs=False)
    p.set_defaults(fn=_cmd_decode)

    p = sub.add_parser("count", help="count pattern copies in a graph")
    p.add_argument("--pattern", required=True)
    p.add_argument("--graph", required=True,
                   help="construction spec, graph6 string, or .g6 file")
    _add_common(p, jobs=False)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("ex", help="Turan number by exhaustive search")
    p.add_argument("--n", type=int, required=True, help="order")
    p.add_argument("--pattern", required=True,
                   help="pattern spec or family:...")
    _add_common(p, out=True, envelope=True)
    p.set_defaults(fn=_cmd_ex)

    p = sub.add_parser("min-copies",
                       help="exact minimum copy count at fixed order and size")
    p.add_argument("--n", type=int, required=True, help="order")
    p.add_argument("--e", type=int, required=True, help="size")
    p.add_argument("--pattern", required=True)
    _add_common(p, out=True, envelope=True)
    p.set_defaults(fn=_cmd_min_copies)

    p = sub.add_parser("classify",
                       help="all classes with an exact copy count")
    p.add_argument("--n", type=int, required=True, help="order")
    p.add_argument("--e", type=int, required=True, help="size")
    p.add_argument("--pattern", required=True)
    p.add_argument("--copies", type=int, required=True)
    _add_common(p, jobs=False, out=True, envelope=True)
    p.set_defaults(fn=_cmd_classify, jobs=1)

    p = sub.add_parser("witness-search",
                       help="simulated-annealing upper bound on the minimum")
    p.add_argument("--n", type=int, required=True, help="order")
    p.add_argument("--e", type=int, required=True, help="size")
    p.add_argument("--pattern", required=True)
    p.add_argument("--seed", type=int, help="override the budget seed")
    p.add_argument("--budget", metavar="SPEC",
                   help="e.g. restarts=20,steps=200000,t0=1.5,decay=0.99997")
    p.add_argument("--stop-at", type=int, metavar="K",
                   help="stop once a graph with K copies is found")
    p.add_argument("--seed-graph", metavar="GRAPH",
                   help="greedily extend this graph in restart 0")
    _add_common(p, out=True)
    p.set_defaults(fn=_cmd_witness_search)

    p = sub.add_parser("verify-paper",
                       help="evaluate the claim catalog into a report")
    p.add_argument("--scope", choices=("quick", "full"), default="quick")
    _add_common(p)
    p.set_defaults(fn=_cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InfeasibleTaskError as exc:
        hint = (" (rerun with --override-envelope to force it)"
                if getattr(args, "override_envelope", None) is False else "")
        print(f"infeasible: {exc}{hint}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (GraphError, Graph6Error, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
