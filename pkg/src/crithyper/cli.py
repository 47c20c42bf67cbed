"""Command-line front end.

Exit codes: 0 verdict true / success, 1 verdict false, 2 input error,
3 capacity error, 4 counterexample to a checked property.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import io
from .construction import build, decompose
from .criteria import predict_and_crosscheck
from .enumeration import (EnumerationTask, KINDS, FILTERS, enumerate_objects, verify_families,
                          verify_realizable_critical, verify_schmerl_trotter, verify_theorem1,
                          verify_theorem2, verify_theorem3_removal, hypergraph_mask)
from .errors import CapacityError, CounterexampleError, InputError
from .graphs import is_circular, primality_graph
from .hypergraph import is_critical, is_prime, nontrivial_modules
from .tournaments import FAMILIES, c3_structure, dual, realize

log = logging.getLogger("crithyper")

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_CAPACITY, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3, 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    t = FAMILIES[args.family](args.order)
    if args.dual:
        t = dual(t)
    _emit(args, io.format_tournament(t), io.tournament_to_json(t))
    return EXIT_TRUE


def cmd_c3(args) -> int:
    h = c3_structure(io.parse_tournament(_read(args.input)))
    _emit(args, io.format_hypergraph(h), io.hypergraph_to_json(h))
    return EXIT_TRUE


def cmd_check(args) -> int:
    h = io.parse_hypergraph(_read(args.input))
    if args.property == "prime":
        verdict = is_prime(h)
    elif args.property == "critical":
        verdict = is_critical(h)
    else:
        verdict = is_critical(h) and is_circular(h, method=args.method, check=False)
    log.info("%s: %s", args.property, verdict)
    if args.format == "json":
        sys.stdout.write(json.dumps({args.property: verdict}) + "\n")
    return EXIT_TRUE if verdict else EXIT_FALSE


def cmd_modules(args) -> int:
    mods = nontrivial_modules(io.parse_hypergraph(_read(args.input)))
    _emit(args, "".join(" ".join(map(str, m)) + "\n" for m in mods), {"modules": [list(m) for m in mods]})
    return EXIT_TRUE


def cmd_pgraph(args) -> int:
    g = primality_graph(io.parse_hypergraph(_read(args.input)))
    _emit(args, io.format_graph(g), io.graph_to_json(g))
    return EXIT_TRUE


def cmd_realize(args) -> int:
    t = realize(io.parse_hypergraph(_read(args.input)))
    if t is None:
        log.info("no realization")
        return EXIT_FALSE
    _emit(args, io.format_tournament(t), io.tournament_to_json(t))
    return EXIT_TRUE


def cmd_build(args) -> int:
    h = build(io.parse_construction_input(_read(args.input)))
    _emit(args, io.format_hypergraph(h), io.hypergraph_to_json(h))
    return EXIT_TRUE


def cmd_decompose(args) -> int:
    inp = decompose(io.parse_hypergraph(_read(args.input)))
    _emit(args, io.format_construction_input(inp), io.construction_input_to_json(inp))
    return EXIT_TRUE


def cmd_criteria(args) -> int:
    inp = io.parse_construction_input(_read(args.input))
    report = predict_and_crosscheck(inp, crosscheck=args.crosscheck or None)
    sys.stdout.write(json.dumps(report.to_json(), default=str) + "\n")
    if report.crosscheck.get("ran") and not report.crosscheck["agrees"]:
        return EXIT_COUNTEREXAMPLE
    return EXIT_TRUE if report.critical_predicted else EXIT_FALSE


def cmd_enumerate(args) -> int:
    task = EnumerationTask(args.kind, args.n, tuple(args.filter or ()), args.dedup)
    result = enumerate_objects(task)
    if args.objects:
        with open(args.objects, "w") as fh:
            for obj in result.objects:
                if task.kind == "all-3-hypergraphs":
                    rec = {**io.hypergraph_to_json(obj), "mask": hypergraph_mask(obj)}
                elif task.kind == "all-tournaments":
                    rec = {**io.tournament_to_json(obj), "mask": obj.mask}
                else:
                    rec = io.construction_input_to_json(obj)
                fh.write(json.dumps(rec) + "\n")
    sys.stdout.write(json.dumps(result.summary()) + "\n")
    return EXIT_TRUE


def _suite_reports(suite: str, max_n: int):
    if suite == "families":
        return [verify_families(tuple(n for n in range(5, max_n + 1, 2)))]
    if suite == "theorem1":
        return [verify_theorem1(n) for n in (5, 6) if n <= max_n] + [verify_realizable_critical(5)]
    if suite == "theorem2":
        return [verify_theorem2(min(max_n, 9))]
    if suite == "theorem3":
        return [verify_theorem3_removal(n) for n in range(4, min(max_n, 6) + 1)]
    if suite == "schmerl-trotter":
        return [verify_schmerl_trotter(n) for n in range(5, min(max_n, 7) + 1)]
    raise InputError(f"unknown suite {suite!r}")


def cmd_verify(args) -> int:
    reports = _suite_reports(args.suite, args.max_n)
    for rep in reports:
        sys.stdout.write(json.dumps(rep.to_json()) + "\n")
    return EXIT_TRUE if all(r.ok for r in reports) else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crithyper", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-v", "--verbose", action="store_true")
    p.add_argument("--seed", type=int, default=None, help="reserved for sampling commands")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", nargs="?", default="-", help="file path, or - for stdin")
        return sp

    g = sub.add_parser("gen", help="generate a tournament of a named family")
    g.add_argument("--family", choices=sorted(FAMILIES), required=True)
    g.add_argument("--order", type=int, required=True)
    g.add_argument("--dual", action="store_true")
    g.set_defaults(func=cmd_gen)

    with_input("c3", "C3-structure of a tournament").set_defaults(func=cmd_c3)
    c = sub.add_parser("check", help="decide a property of a hypergraph")
    c.add_argument("property", choices=("prime", "critical", "circular"))
    c.add_argument("input", nargs="?", default="-", help="file path, or - for stdin")
    c.add_argument("--method", choices=("fast", "iso", "both"), default="both")
    c.set_defaults(func=cmd_check)
    with_input("modules", "list nontrivial modules").set_defaults(func=cmd_modules)
    with_input("pgraph", "primality graph of a prime hypergraph").set_defaults(func=cmd_pgraph)
    with_input("realize", "find a realizing tournament").set_defaults(func=cmd_realize)
    with_input("build", "build a hypergraph from a construction input").set_defaults(func=cmd_build)
    with_input("decompose", "recover a construction input").set_defaults(func=cmd_decompose)
    cr = with_input("criteria", "evaluate C1-C6 on a construction input")
    cr.add_argument("--crosscheck", action="store_true")
    cr.set_defaults(func=cmd_criteria)

    e = sub.add_parser("enumerate", help="exhaustive enumeration with summary counts")
    e.add_argument("--kind", choices=KINDS, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--filter", choices=FILTERS, action="append")
    e.add_argument("--dedup", action="store_true")
    e.add_argument("--objects", help="write the objects as JSON lines to this file")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=("families", "theorem1", "theorem2", "theorem3", "schmerl-trotter"),
                   required=True)
    v.add_argument("--max-n", type=int, default=9)
    v.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # argparse fills an optional positional before later options, so `check P --method m FILE`
        # leaves FILE over
        if getattr(args, "command", None) == "check" and args.input == "-" and len(extra) == 1 \
                and not extra[0].startswith("-"):
            args.input, extra = extra[0], []
        if extra:
            parser.error("unrecognized arguments: " + " ".join(extra))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_TRUE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except CounterexampleError as exc:
        print(f"counterexample: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
