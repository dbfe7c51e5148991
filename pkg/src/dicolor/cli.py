"""Command-line front end: generate, analyze, measure, walk, verify, export.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from .digraph import (CirculantSpec, Digraph, DigraphError,
                      circulant_tournament, delete_vertex, dichromatic_number,
                      find_cycle_in_subset, format_digraph, parse_digraph)
from .coloring import (Coloring, ColoringError, first_invalid_class,
                       parse_coloring)
from .reconfig import (ExportCapError, analyze, build, distance, export_csv,
                       export_dot, format_table)
from .verify import (claim_ids, default_budget, results_to_json, run_all,
                     state_space, summarize)
from .walks import (CFamilyColoring, RecoloringWalk, WalkPreconditionError,
                    c_family, extend_class_to_interval, frozen_coloring,
                    validate_walk, walk_singleton_classes,
                    walk_singletons_plus_pair)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class _UsageError(Exception):
    pass


class _ResourceError(Exception):
    pass


def _add_source_args(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("digraph source")
    src.add_argument("--circulant", type=int, metavar="N",
                     help="circulant tournament with half order N")
    src.add_argument("--reversed", dest="reversed_jump", type=int,
                     metavar="J", help="reverse jump J (with --circulant)")
    src.add_argument("--file", metavar="PATH",
                     help="read digraph from a text file")
    src.add_argument("--delete", type=int, action="append", default=[],
                     metavar="V", help="delete vertex V (repeatable)")


def _load_digraph(args) -> Digraph:
    if (args.circulant is None) == (args.file is None):
        raise _UsageError("exactly one of --circulant or --file is required")
    if args.circulant is not None:
        d = circulant_tournament(
            CirculantSpec(args.circulant, args.reversed_jump))
    else:
        if args.reversed_jump is not None:
            raise _UsageError("--reversed only applies to --circulant")
        with open(args.file, encoding="utf-8") as fh:
            d = parse_digraph(fh.read())
    for v in args.delete:
        d = delete_vertex(d, v)
    return d


def _write(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _coloring_or_die(d: Digraph, text: str, k: int, name: str) -> Coloring:
    c = parse_coloring(text, k)
    if len(c.colors) != d.num_vertices:
        raise _UsageError(
            f"coloring {name} has {len(c.colors)} entries for a digraph on "
            f"{d.num_vertices} vertices")
    bad = first_invalid_class(d, c)
    if bad is not None:
        cyc = find_cycle_in_subset(d, c.class_members(bad))
        loop = " -> ".join(str(v) for v in cyc + [cyc[0]])
        raise _UsageError(
            f"coloring {name} is invalid: class {bad} induces the cycle "
            f"{loop}")
    return c


def _guard_budget(k: int, n: int, budget: int, heavy: bool) -> None:
    if heavy:
        return
    if state_space(k, n) > budget:
        raise _ResourceError(
            f"state space {k}^{n} exceeds budget {budget}; "
            f"rerun with --heavy to force")


def cmd_gen(args) -> int:
    d = _load_digraph(args)
    _write(format_digraph(d, expand=args.expand), args.output)
    return EXIT_OK


def cmd_analyze(args) -> int:
    d = _load_digraph(args)
    _guard_budget(args.k, d.num_vertices, args.budget, args.heavy)
    if not args.allow_empty:
        chi = dichromatic_number(d)
        if args.k < chi:
            raise _UsageError(
                f"k={args.k} is below the dichromatic number {chi}; "
                f"pass --allow-empty to analyze an empty graph")
    rep = analyze(d, args.k, orbit_reduction=not args.no_orbit,
                  threads=args.threads)
    if args.format == "json":
        _write(rep.to_json(), args.output)
    else:
        _write(format_table([rep]), args.output)
    return EXIT_OK


def _parse_k_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def cmd_table(args) -> int:
    d = _load_digraph(args)
    ks = _parse_k_range(args.k_range)
    reports = []
    skipped = []
    for k in ks:
        try:
            _guard_budget(k, d.num_vertices, args.budget, args.heavy)
            if not args.heavy and state_space(k, d.num_vertices) > args.cap:
                raise _ResourceError("row above the default cap")
        except _ResourceError:
            skipped.append(k)
            continue
        reports.append(analyze(d, k, orbit_reduction=not args.no_orbit,
                               threads=args.threads))
    out = format_table(reports)
    for k in skipped:
        out += f"k={k}: skipped (state space above cap; use --heavy)\n"
    _write(out, args.output)
    return EXIT_OK


def cmd_dist(args) -> int:
    d = _load_digraph(args)
    a = _coloring_or_die(d, args.a, args.k, "a")
    b = _coloring_or_die(d, args.b, args.k, "b")
    if args.show_walk:
        dd, path = distance(d, args.k, a, b, with_path=True)
    else:
        dd, path = distance(d, args.k, a, b), None
    if dd is None:
        print("unreachable")
        return EXIT_OK
    print(dd)
    if path:
        moves = []
        for prev, nxt in zip(path, path[1:]):
            v = next(i for i in range(len(prev.colors))
                     if prev.colors[i] != nxt.colors[i])
            moves.append((v, nxt.colors[v]))
        walk = RecoloringWalk(path[0], tuple(moves))
        sys.stdout.write(walk.as_text())
    return EXIT_OK


def _parse_int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _need(value, flag: str):
    if value is None:
        raise _UsageError(f"{flag} is required for this builder")
    return value


def cmd_walk(args) -> int:
    builder = args.builder
    if builder == "frozen":
        c = frozen_coloring(args.n_prime, args.rotation,
                            _parse_int_list(args.perm) if args.perm else None)
        print(c.as_text())
        return EXIT_OK
    if builder == "c-family":
        if args.circulant is None or args.reversed_jump != args.circulant:
            raise _UsageError("c-family needs --circulant N --reversed N")
        spec = CirculantSpec(args.circulant, args.reversed_jump)
        cols = tuple(_parse_int_list(args.cell_colors))
        c = c_family(spec, CFamilyColoring(args.anchor, cols))
        print(c.as_text())
        return EXIT_OK

    d = _load_digraph(args)
    if builder == "extend-interval":
        if d.provenance is None or not d.provenance.is_top_jump_reversed():
            raise _UsageError(
                "extend-interval needs --circulant N --reversed N")
        a = _coloring_or_die(d, _need(args.a, "-a"), args.k, "a")
        walk = extend_class_to_interval(d.provenance, a, args.color)
        size = len(a.class_members(args.color))
        n = d.provenance.half_order
        bound = n - size if size <= 1 else n + 2 - size
    elif builder == "singletons":
        a = _coloring_or_die(d, _need(args.a, "-a"), args.k, "a")
        b = _coloring_or_die(d, _need(args.b, "-b"), args.k, "b")
        classes = _parse_int_list(_need(args.classes, "--classes"))
        walk = walk_singleton_classes(d, a, b, classes)
        bound = len(classes)
    elif builder == "singleton-pair":
        a = _coloring_or_die(d, _need(args.a, "-a"), args.k, "a")
        b = _coloring_or_die(d, _need(args.b, "-b"), args.k, "b")
        singles = _parse_int_list(_need(args.classes, "--classes"))
        walk = walk_singletons_plus_pair(
            d, a, b, _need(args.pair_class, "--pair-class"), singles)
        bound = len(singles) + 2
    else:
        raise _UsageError(f"unknown builder {builder!r}")
    sys.stdout.write(walk.as_text())
    verdict = validate_walk(d, walk)
    status = "ok" if verdict is None else f"invalid at step {verdict}"
    print(f"length {walk.length} (bound {bound}); validation: {status}")
    return EXIT_OK if verdict is None else EXIT_VERIFY_FAIL


def cmd_export(args) -> int:
    d = _load_digraph(args)
    _guard_budget(args.k, d.num_vertices, args.budget, False)
    g = build(d, args.k)
    if args.format == "csv":
        text = export_csv(g, cap=args.cap)
    else:
        text = export_dot(g, cap=args.cap)
    _write(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.list_claims:
        for cid in claim_ids():
            print(cid)
        return EXIT_OK
    claims = _parse_str_list(args.claims) if args.claims else None
    results = run_all(budget=args.budget, heavy=args.heavy, claims=claims,
                      threads=args.threads)
    for r in results:
        note = f" ({r.reason})" if r.reason else ""
        print(f"{r.claim_id}: {r.verdict}{note} [{r.runtime_ms} ms]")
        if r.verdict == "fail":
            print(f"  expected: {r.expected}")
            print(f"  observed: {r.observed}")
    summary = summarize(results)
    print(f"passed={summary['passed']} failed={summary['failed']} "
          f"skipped={summary['skipped']}")
    if args.json:
        _write(results_to_json(results), args.json)
    return EXIT_VERIFY_FAIL if summary["failed"] else EXIT_OK


def _parse_str_list(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dicolor",
        description="Dicoloring graphs of digraphs: build, analyze, verify.")
    sub = parser.add_subparsers(dest="command", required=True)
    budget = default_budget()
    threads_default = os.cpu_count() or 1

    p = sub.add_parser("gen", help="write a digraph file")
    _add_source_args(p)
    p.add_argument("--expand", action="store_true",
                   help="write explicit arcs instead of a circulant header")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="statistics of one dicoloring graph")
    _add_source_args(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-orbit", action="store_true",
                   help="disable orbit-reduced BFS sweeps")
    p.add_argument("--threads", type=int, default=threads_default)
    p.add_argument("--allow-empty", action="store_true",
                   help="allow k below the dichromatic number")
    p.add_argument("--heavy", action="store_true",
                   help="lift the state-space budget guard")
    p.add_argument("--budget", type=int, default=budget)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table", help="one analysis row per palette size")
    _add_source_args(p)
    p.add_argument("--k-range", default="3..5", metavar="LO..HI")
    p.add_argument("--heavy", action="store_true")
    p.add_argument("--cap", type=int, default=200_000,
                   help="state-space cap for rows run without --heavy")
    p.add_argument("--budget", type=int, default=budget)
    p.add_argument("--no-orbit", action="store_true")
    p.add_argument("--threads", type=int, default=threads_default)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("dist", help="distance between two colorings")
    _add_source_args(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-a", required=True, metavar="COLORING")
    p.add_argument("-b", required=True, metavar="COLORING")
    p.add_argument("--show-walk", action="store_true")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("walk", help="run a constructive walk builder")
    _add_source_args(p)
    p.add_argument("--builder", required=True,
                   choices=("singletons", "singleton-pair",
                            "extend-interval", "frozen", "c-family"))
    p.add_argument("-k", type=int, default=3)
    p.add_argument("-a", metavar="COLORING")
    p.add_argument("-b", metavar="COLORING")
    p.add_argument("--classes", metavar="C1,C2,...")
    p.add_argument("--pair-class", type=int)
    p.add_argument("--color", type=int, default=1,
                   help="class to extend (extend-interval)")
    p.add_argument("--n-prime", type=int, default=1)
    p.add_argument("--rotation", type=int, default=0)
    p.add_argument("--perm", metavar="P1,P2,...")
    p.add_argument("--anchor", type=int, default=0)
    p.add_argument("--cell-colors", default="1,2,3", metavar="C1,C2,C3")
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("export", help="DOT or CSV edge list")
    _add_source_args(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--format", choices=("dot", "csv"), default="dot")
    p.add_argument("--cap", type=int, default=2000)
    p.add_argument("--budget", type=int, default=budget)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", help="run the claim registry")
    p.add_argument("--claims", metavar="ID1,ID2,...")
    p.add_argument("--budget", type=int, default=budget)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--heavy", action="store_true")
    p.add_argument("--threads", type=int, default=threads_default)
    p.add_argument("--list", dest="list_claims", action="store_true",
                   help="list claim ids and exit")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (_ResourceError, ExportCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (_UsageError, DigraphError, ColoringError,
            WalkPreconditionError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
