"""
Command definitions and dispatch.

fan      info | class | verify
polytope facets | ehrhart | weighted | pick | hirzpoly
"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, List, Optional

from classes import class_report, verify_identities
from config import settings
from counting import (
    ehrhart_subcomplex,
    ehrhart_via_classes,
    hirzebruch_polynomial,
    pick_report,
    weighted_count_identity,
)
from errors import EXIT_IDENTITY_VIOLATION, EXIT_OK, InvalidInputError
from fan import fan_report
from polytope import facet_report
from schemas.reports import ClassKind
from utils.helpers import dump_report, parse_rational
from utils.logger import logger, reconfigure_logger
from utils.validators import validate_threads
from .io import load_cone_subset, load_fan, load_polytope, load_subcomplex


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors raise instead of exiting with status 2."""

    def error(self, message: str):
        raise InvalidInputError(message, {"usage": self.format_usage().strip()})


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=["json", "text"], default="json",
                        help="report format on standard output (default json)")
    common.add_argument("--threads", type=int, default=1,
                        help="worker threads for lattice-point scans (default 1)")
    common.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    common.add_argument("--log-format", default="text", choices=["text", "json"])
    common.add_argument("--log-file", default=None,
                        help="also write a full debug trace to this file")
    common.add_argument("--color", action="store_true", help="colored text log levels on stderr")
    return common


def build_parser() -> CommandParser:
    """Build the full argument parser."""
    common = _common_options()
    parser = CommandParser(
        prog=settings.app_name,
        description="Exact characteristic classes of simplicial toric varieties.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=CommandParser)

    fan_parser = groups.add_parser("fan", help="commands on a fan file")
    fan_commands = fan_parser.add_subparsers(dest="command", required=True, parser_class=CommandParser)

    info = fan_commands.add_parser("info", parents=[common], help="smoothness, completeness, singular cones")
    info.add_argument("fan")
    info.set_defaults(handler=run_fan_info)

    klass = fan_commands.add_parser("class", parents=[common], help="compute a characteristic class")
    klass.add_argument("fan")
    klass.add_argument("--kind", required=True, choices=[k.value for k in ClassKind])
    klass.add_argument("--y", type=_rational, default=None,
                       help="rational specialization of y, e.g. --y -1/2 or --y=-1/2")
    klass.add_argument("--normalized", action="store_true", help="normalized Hirzebruch class")
    klass.add_argument("--subcomplex", default=None, help="JSON file of a star-closed cone subset")
    klass.set_defaults(handler=run_fan_class)

    verify = fan_commands.add_parser("verify", parents=[common], help="run the identity suite")
    verify.add_argument("fan")
    verify.set_defaults(handler=run_fan_verify)

    poly_parser = groups.add_parser("polytope", help="commands on a polytope file")
    poly_commands = poly_parser.add_subparsers(dest="command", required=True, parser_class=CommandParser)

    facets = poly_commands.add_parser("facets", parents=[common], help="facets, faces and normal fan")
    facets.add_argument("polytope")
    facets.set_defaults(handler=run_polytope_facets)

    ehrhart = poly_commands.add_parser("ehrhart", parents=[common], help="Ehrhart polynomial from Todd classes")
    ehrhart.add_argument("polytope")
    ehrhart.add_argument("--max-dilate", type=_non_negative, default=None)
    ehrhart.add_argument("--subcomplex", default=None, help="JSON file of a polytopal subcomplex")
    ehrhart.add_argument("--csv", default=None, help="also write the residual table as CSV")
    ehrhart.set_defaults(handler=run_polytope_ehrhart)

    weighted = poly_commands.add_parser("weighted", parents=[common], help="weighted lattice-point identity")
    weighted.add_argument("polytope")
    weighted.add_argument("--subcomplex", default=None)
    modes = weighted.add_mutually_exclusive_group()
    modes.add_argument("--dual", action="store_const", dest="mode", const="dual")
    modes.add_argument("--half", action="store_const", dest="mode", const="half")
    weighted.set_defaults(handler=run_polytope_weighted, mode="standard")

    pick = poly_commands.add_parser("pick", parents=[common], help="classical and parametrized Pick")
    pick.add_argument("polytope")
    pick.set_defaults(handler=run_polytope_pick)

    hirzpoly = poly_commands.add_parser("hirzpoly", parents=[common], help="Hirzebruch polynomial of D_P")
    hirzpoly.add_argument("polytope")
    hirzpoly.add_argument("--subcomplex", default=None)
    hirzpoly.set_defaults(handler=run_polytope_hirzpoly)

    return parser


RATIONAL_OPTIONS = ("--y",)


def attach_rational_values(argv: List[str]) -> List[str]:
    """
    Glue a rational option to its value so "--y -1/2" parses like "--y=-1/2".

    argparse only accepts plain negative numbers as option values and reads
    "-1/2" as an unknown flag.
    """
    joined: List[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token in RATIONAL_OPTIONS:
            value = next(tokens, None)
            if value is None:
                joined.append(token)
            elif value.startswith("-") and not value.startswith("--"):
                joined.append(f"{token}={value}")
            else:
                joined.extend([token, value])
        else:
            joined.append(token)
    return joined


def apply_options(args: argparse.Namespace) -> None:
    """Push global flags into settings and rebuild the logger."""
    valid, message = validate_threads(args.threads)
    if not valid:
        raise InvalidInputError(message, {"threads": args.threads})
    settings.apply(
        output_format=args.output_format,
        threads=args.threads,
        log_level=args.log_level,
        log_format=args.log_format,
        enable_color=args.color,
    )
    settings.log_file = args.log_file
    reconfigure_logger()


def _print(report) -> None:
    print(dump_report(report, settings.output_format))


# Fan commands

def run_fan_info(args: argparse.Namespace) -> int:
    _print(fan_report(load_fan(args.fan)))
    return EXIT_OK


def run_fan_class(args: argparse.Namespace) -> int:
    fan = load_fan(args.fan)
    subset = load_cone_subset(fan, args.subcomplex)
    _print(class_report(fan, ClassKind(args.kind), args.y, args.normalized, subset))
    return EXIT_OK


def run_fan_verify(args: argparse.Namespace) -> int:
    report = verify_identities(load_fan(args.fan))
    _print(report)
    return EXIT_OK if report.all_passed else EXIT_IDENTITY_VIOLATION


# Polytope commands

def run_polytope_facets(args: argparse.Namespace) -> int:
    _print(facet_report(load_polytope(args.polytope)))
    return EXIT_OK


def run_polytope_ehrhart(args: argparse.Namespace) -> int:
    polytope = load_polytope(args.polytope)
    if args.subcomplex:
        result = ehrhart_subcomplex(load_subcomplex(polytope, args.subcomplex), args.max_dilate)
    else:
        result = ehrhart_via_classes(polytope, args.max_dilate)
    if args.csv:
        Path(args.csv).write_text(result.to_csv(), encoding="utf-8")
        logger.info(f"Residual table written to {args.csv}")
    _print(result)
    return EXIT_OK if result.passed else EXIT_IDENTITY_VIOLATION


def run_polytope_weighted(args: argparse.Namespace) -> int:
    polytope = load_polytope(args.polytope)
    complex_ = load_subcomplex(polytope, args.subcomplex) if args.subcomplex else None
    report = weighted_count_identity(polytope, complex_, args.mode)
    _print(report)
    return EXIT_OK if report.equal else EXIT_IDENTITY_VIOLATION


def run_polytope_pick(args: argparse.Namespace) -> int:
    report = pick_report(load_polytope(args.polytope))
    _print(report)
    passed = report.ypick_equal and report.pick_equal and report.class_equal
    return EXIT_OK if passed else EXIT_IDENTITY_VIOLATION


def run_polytope_hirzpoly(args: argparse.Namespace) -> int:
    polytope = load_polytope(args.polytope)
    complex_ = load_subcomplex(polytope, args.subcomplex) if args.subcomplex else None
    report = hirzebruch_polynomial(polytope, complex_)
    _print(report)
    return EXIT_OK if report.equal and report.table_matches else EXIT_IDENTITY_VIOLATION


def run(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, apply settings and run the selected command."""
    args = build_parser().parse_args(attach_rational_values(sys.argv[1:] if argv is None else argv))
    apply_options(args)
    handler: Callable[[argparse.Namespace], int] = args.handler
    logger.debug(f"Running {args.group} {args.command}")
    return handler(args)
