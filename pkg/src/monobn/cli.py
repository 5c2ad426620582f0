"""Command-line front end.

Exit codes: 0 success (or every verification passed), 1 a verification check
failed, 2 usage, input or format error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import asyncdyn, constructions, embedmono, netcore, netio, theorems

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        netio.write_atomic(path, text)


def cmd_eval(args) -> int:
    f = netio.load_network(args.network)
    x = netio.parse_literal(args.x, f.n)
    if args.schedule is None:
        print(netcore.evaluate(f, x).literal)
    else:
        for c in asyncdyn.simulate(f, x, netio.parse_schedule(args.schedule, f.n)):
            print(c.literal)
    return EXIT_OK


def cmd_graycode(args) -> int:
    n = args.size if args.size is not None else args.n
    if n is None:
        raise netio.FormatError("graycode needs a component count (positional or --n)")
    w = constructions.gray_code_network(n)
    _emit(args.output, netio.dumps_network(w.network))
    print(f"start {w.start.literal}", file=sys.stderr)
    print(f"end {w.end.literal}", file=sys.stderr)
    return EXIT_OK


def cmd_embed(args) -> int:
    f = netio.load_network(args.network)
    _emit(args.output, netio.dumps_network(embedmono.embed(f, force=args.force)))
    return EXIT_OK


def cmd_igraph(args) -> int:
    f = netio.load_network(args.network)
    _emit(args.output, netio.interaction_graph_dot(netcore.interaction_graph(f)))
    return EXIT_OK


def cmd_asyncgraph(args) -> int:
    f = netio.load_network(args.network)
    if f.n > asyncdyn.ASYNC_GRAPH_CAP and not args.force:
        raise netcore.SizeError(f"n={f.n} exceeds {asyncdyn.ASYNC_GRAPH_CAP}; pass --force")
    _emit(args.output, netio.async_graph_dot(f))
    return EXIT_OK


def cmd_distance(args) -> int:
    f = netio.load_network(args.network)
    x = netio.parse_literal(args.source, f.n)
    y = netio.parse_literal(args.target, f.n)
    print(asyncdyn.distance(f, x, y))
    return EXIT_OK


def cmd_diameter(args) -> int:
    f = netio.load_network(args.network)
    print(asyncdyn.diameter(f, cap=netcore.MAX_N if args.force else asyncdyn.DIAMETER_CAP))
    return EXIT_OK


def cmd_fixedpoints(args) -> int:
    f = netio.load_network(args.network)
    for y in asyncdyn.fixed_points(f):
        print(y.literal)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.input is not None:
        f = netio.load_network(args.input)
        reports = theorems.run_suite(args.suite, f, {"source": args.input}, force=args.force)
    else:
        if args.n is None:
            raise netio.FormatError("corpus verification needs --n (or pass --input)")
        reports = theorems.run_corpus(args.suite, args.count, args.n, args.seed, force=args.force)
    doc = [r.to_dict(timing=not args.no_timing) for r in reports]
    _emit(args.report, json.dumps(doc, indent=2) + "\n")
    summary = theorems.summarize(reports)
    print(json.dumps(summary), file=sys.stderr)
    return EXIT_OK if summary["failed"] == 0 else EXIT_FAIL


def _global_flags(parser: argparse.ArgumentParser, defaults: bool) -> None:
    # subparsers use SUPPRESS so a flag given before the subcommand is not overwritten
    kw = (lambda v: {"default": v}) if defaults else (lambda v: {"default": argparse.SUPPRESS})
    parser.add_argument("--force", action="store_true", help="bypass size and hypothesis caps", **kw(False))
    parser.add_argument("--seed", type=int, help="base seed for corpus generation", **kw(0))
    parser.add_argument("--count", type=int, help="number of corpus instances", **kw(1))
    parser.add_argument("--n", type=int, help="component count for generated networks", **kw(None))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monobn", description=__doc__.splitlines()[0])
    _global_flags(parser, defaults=True)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, defaults=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="apply f once, or follow an asynchronous schedule")
    p.add_argument("network")
    p.add_argument("x", help="configuration literal, component 1 leftmost")
    p.add_argument("--schedule", help="comma-separated 1-based component indices")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("graycode", parents=[common], help="write the Gray-code path network")
    p.add_argument("size", type=int, nargs="?")
    p.add_argument("output")
    p.set_defaults(func=cmd_graycode)

    p = sub.add_parser("embed", parents=[common], help="write the 2n-component monotone embedding")
    p.add_argument("network")
    p.add_argument("output")
    p.set_defaults(func=cmd_embed)

    for name, func, what in (("igraph", cmd_igraph, "signed interaction graph"),
                             ("asyncgraph", cmd_asyncgraph, "asynchronous graph")):
        p = sub.add_parser(name, parents=[common], help=f"DOT export of the {what}")
        p.add_argument("network")
        p.add_argument("output", help="DOT path, or - for stdout")
        p.set_defaults(func=func)

    p = sub.add_parser("distance", parents=[common], help="asynchronous distance between two configurations")
    p.add_argument("network")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("diameter", parents=[common], help="largest finite asynchronous distance")
    p.add_argument("network")
    p.set_defaults(func=cmd_diameter)

    p = sub.add_parser("fixedpoints", parents=[common], help="list fixed points")
    p.add_argument("network")
    p.set_defaults(func=cmd_fixedpoints)

    p = sub.add_parser("verify", parents=[common], help="run verification suites, write a JSON report")
    p.add_argument("--input", help="network file; omit to verify a generated corpus")
    p.add_argument("--suite", required=True, choices=theorems.SUITES + ("all",))
    p.add_argument("--report", required=True, help="report path, or - for stdout")
    p.add_argument("--no-timing", action="store_true", help="write zero timings for byte-stable reports")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
