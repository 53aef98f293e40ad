"""Command-line entry point.

Three subcommands: ``evaluate`` and ``condition`` read a scenario file
and print a report; ``verify`` runs the enumeration oracle over the
default grids and exits nonzero on any disagreement. Output is a plain
table by default, or a deterministic JSON document with ``--output
structured``.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import oracle, report
from .errors import BeliefError, ParseError
from .rationals import parse_rational
from .scenario import load_scenario


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beliefcalc",
        description="Exact belief-function calculus for identification scenarios.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output",
        choices=("table", "structured"),
        default="table",
        help="report format (default: table)",
    )
    common.add_argument(
        "--float",
        action="store_true",
        dest="float_backend",
        help="evaluate island closed forms in floating point (large populations)",
    )

    evaluate = sub.add_parser(
        "evaluate", parents=[common], help="evaluate a scenario file"
    )
    evaluate.add_argument("file", help="scenario file")

    condition = sub.add_parser(
        "condition", parents=[common], help="condition a custom mass function on an event"
    )
    condition.add_argument("file", help="custom-mass scenario file with a condition line")

    verify = sub.add_parser(
        "verify", parents=[common], help="run the enumeration oracle against every closed form"
    )
    verify.add_argument(
        "--max-pop",
        type=int,
        default=8,
        metavar="K",
        help="largest island population to enumerate (default 8, cap 12)",
    )
    verify.add_argument(
        "--grid",
        metavar="SPEC",
        default=None,
        help="comma-separated trait probabilities, e.g. 1/4,1/2,3/4",
    )
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _run_verify(args)
        return _run_scenario(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BeliefError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def _run_scenario(args) -> int:
    scenario = load_scenario(args.file)
    if args.command == "condition":
        if args.float_backend:
            print("error: conditioning runs on the exact backend only", file=sys.stderr)
            return 2
        result = report.condition_scenario(scenario)
    else:
        result = report.evaluate_scenario(scenario, float_backend=args.float_backend)
    if args.output == "structured":
        sys.stdout.write(report.render_structured(result))
    else:
        sys.stdout.write(report.render_table(result))
    return 0


def _run_verify(args) -> int:
    if args.float_backend:
        print("error: verify is exact-only; --float is not accepted", file=sys.stderr)
        return 2
    if args.grid is None:
        trait_probs = oracle.DEFAULT_TRAIT_PROBS
    else:
        trait_probs = _parse_grid(args.grid)
    run = oracle.run_verification(max_population=args.max_pop, trait_probs=trait_probs)
    if args.output == "structured":
        sys.stdout.write(
            report.render_verification_structured(run, args.max_pop, trait_probs)
        )
    else:
        sys.stdout.write(report.render_verification_table(run, args.max_pop, trait_probs))
    return 0 if run.ok else 1


def _parse_grid(spec: str) -> tuple[Fraction, ...]:
    probs = []
    for token in spec.split(","):
        try:
            probs.append(parse_rational(token))
        except ValueError:
            raise ParseError(f"bad probability {token.strip()!r} in --grid", 1, 1) from None
    if not probs:
        raise ParseError("--grid needs at least one probability", 1, 1)
    return tuple(probs)


if __name__ == "__main__":
    sys.exit(main())
