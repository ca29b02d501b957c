"""Command-line front end.

Subcommands: map (apply the bijection or its inverse to one
configuration), render (re-serialize a configuration), enumerate (list
a configuration family), and verify (run the verification suites and
emit a text or JSON report).

Exit codes: 0 on success, 1 when a verification case fails, 2 for
usage, parse, or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bijection, configuration, suites

VERIFY_DEFAULTS = {
    "bijection": {"n_max": 8},
    "identities": {"n_max": 64, "t_max": 8},
    "series": {"order": 64},
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binomconv",
        description=(
            "Workbench for the bijection between ordered and tower-free "
            "2-row grid configurations and the central binomial convolution "
            "identities it proves."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    map_parser = sub.add_parser(
        "map", help="apply the bijection or its inverse to a configuration"
    )
    map_parser.add_argument("config", help="configuration in compact format (.Aa1Bb2)")
    direction = map_parser.add_mutually_exclusive_group(required=True)
    direction.add_argument(
        "--forward", action="store_true", help="ordered to tower-free"
    )
    direction.add_argument(
        "--inverse", action="store_true", help="tower-free to ordered"
    )
    map_parser.add_argument(
        "--trace", action="store_true", help="print each recursion step"
    )

    render_parser = sub.add_parser("render", help="re-serialize a configuration")
    render_parser.add_argument("config", help="configuration in compact format")
    render_parser.add_argument(
        "--mode", choices=("compact", "grid"), default="grid", help="output format"
    )

    enum_parser = sub.add_parser("enumerate", help="list a configuration family")
    enum_parser.add_argument("kind", choices=("ordered", "tower-free"))
    enum_parser.add_argument("n", type=int, help="configuration length")
    enum_parser.add_argument(
        "--limit", type=int, default=None, help="stop after this many lines"
    )

    verify_parser = sub.add_parser("verify", help="run verification suites")
    verify_parser.add_argument(
        "--suite",
        choices=suites.SUITE_NAMES + ("all",),
        default="all",
    )
    verify_parser.add_argument(
        "--n-max", type=int, default=None,
        help="length/width bound (bijection sweeps accept at most 10)",
    )
    verify_parser.add_argument(
        "--t-max", type=int, default=None, help="offset vector width bound"
    )
    verify_parser.add_argument(
        "--order", type=int, default=None, help="series truncation order"
    )
    verify_parser.add_argument(
        "--seed", type=int, default=0, help="seed for random rational sampling"
    )
    verify_parser.add_argument(
        "--jobs", type=int, default=1, help="concurrent case execution"
    )
    verify_parser.add_argument(
        "--format", choices=("text", "json"), default="text"
    )
    verify_parser.add_argument(
        "--out", default=None, help="write the report to this path instead of stdout"
    )
    return parser


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_map(args: argparse.Namespace) -> int:
    try:
        config = configuration.parse_compact(args.config)
        trace: bijection.TraceLog | None = [] if args.trace else None
        if args.forward:
            image = bijection.phi(config, trace)
        else:
            image = bijection.phi_inverse(config, trace)
    except (configuration.ConfigurationError, bijection.BijectionError) as error:
        return _fail(str(error))
    if trace:
        print(bijection.format_trace(trace))
    print(configuration.render(image, "compact"))
    print(configuration.render(image, "grid"))
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    try:
        config = configuration.parse_compact(args.config)
    except configuration.ConfigurationError as error:
        return _fail(str(error))
    print(configuration.render(config, args.mode))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n < 0:
        return _fail("length must be nonnegative")
    if args.n > suites.BIJECTION_LENGTH_LIMIT:
        return _fail(
            f"enumeration is bounded at length {suites.BIJECTION_LENGTH_LIMIT}"
        )
    if args.limit is not None and args.limit < 0:
        return _fail("limit must be nonnegative")
    produce = (
        configuration.enumerate_ordered
        if args.kind == "ordered"
        else configuration.enumerate_tower_free
    )
    emitted = 0
    for config in produce(args.n):
        if args.limit is not None and emitted >= args.limit:
            break
        print(configuration.render(config, "compact"))
        emitted += 1
    return 0


def _build_cases(name: str, args: argparse.Namespace) -> list[suites.Case]:
    if name == "bijection":
        n_max = args.n_max if args.n_max is not None else VERIFY_DEFAULTS[name]["n_max"]
        return suites.bijection_suite(n_max=n_max)
    if name == "identities":
        n_max = args.n_max if args.n_max is not None else VERIFY_DEFAULTS[name]["n_max"]
        t_max = args.t_max if args.t_max is not None else VERIFY_DEFAULTS[name]["t_max"]
        return suites.identities_suite(n_max=n_max, t_max=t_max, seed=args.seed)
    n_order = args.order if args.order is not None else VERIFY_DEFAULTS["series"]["order"]
    return suites.series_suite(order=n_order)


def cmd_verify(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        return _fail("jobs must be at least 1")
    selected = suites.SUITE_NAMES if args.suite == "all" else (args.suite,)
    try:
        cases = []
        for name in selected:
            cases.extend(_build_cases(name, args))
    except ValueError as error:
        return _fail(str(error))
    report = suites.run_cases(args.suite, cases, jobs=args.jobs)
    if args.format == "json":
        payload = json.dumps(report.to_dict(), indent=2)
    else:
        payload = report.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(payload + "\n")
        totals = report.totals
        print(
            f"{args.suite}: {totals['pass']} passed, {totals['fail']} failed; "
            f"report written to {args.out}"
        )
    else:
        print(payload)
    return 0 if report.all_passed else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "map":
        return cmd_map(args)
    if args.command == "render":
        return cmd_render(args)
    if args.command == "enumerate":
        return cmd_enumerate(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
