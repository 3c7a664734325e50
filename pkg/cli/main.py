"""
cli.main
--------

``supercap`` command line. Every command prints one report on stdout, as
text by default or as canonical JSON with ``--json``; logs go to stderr.

Exit codes::

    0  success, or capable
    1  not capable
    2  undecided
    3  input or parse error
    4  oracle limit exceeded
    5  check failure (invalid algebra, reproduction mismatch, class bound too small)
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from typing import Callable, List, Optional

from core.algebra import dumps_algebra
from core.capability import CapabilityStatus
from core.catalog import construct, parse_tag
from core.errors import (
    ClassBoundError,
    ConsistencyError,
    ContractViolation,
    InputError,
    InvalidAlgebraError,
    NotAnIdealError,
    OracleLimitError,
    PreconditionError,
    SupercapError,
)
from core.oracle import OracleLimits
from core.pipeline import (
    ORACLE_QUANTITIES,
    capability_report,
    corank_report,
    exterior_square_report,
    load_algebra,
    load_presentation,
    multiplier_report,
    oracle_report,
    recognition_report,
    table_report,
    validation_report,
)
from core.reports import Report, digest
from core.reproduction import Settings, passed, reproduce
from utils.logging import get_logger

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

EXIT_OK = 0
EXIT_NOT_CAPABLE = 1
EXIT_UNDECIDED = 2
EXIT_INPUT = 3
EXIT_LIMIT = 4
EXIT_CHECK = 5

_STATUS_EXIT = {
    CapabilityStatus.CAPABLE: EXIT_OK,
    CapabilityStatus.NOT_CAPABLE: EXIT_NOT_CAPABLE,
    CapabilityStatus.UNDECIDED: EXIT_UNDECIDED,
}


def _emit(report: Report, args: argparse.Namespace) -> None:
    sys.stdout.write(report.to_json() if args.json else report.to_text())


def _limits(args: argparse.Namespace) -> OracleLimits:
    limits = OracleLimits.from_config()
    if getattr(args, "limit_dim", None) is not None:
        limits = replace(limits, max_total_dim=args.limit_dim)
    return limits


def cmd_validate(args: argparse.Namespace) -> int:
    L, source = load_algebra(args.source)
    report = validation_report(L, source)
    _emit(report, args)
    return EXIT_OK if report.results["validation"]["ok"] else EXIT_CHECK


def cmd_construct(args: argparse.Namespace) -> int:
    L = construct(parse_tag(args.tag))
    text = dumps_algebra(L)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    report = Report(
        command="construct",
        input_digest=digest(args.tag),
        results={"algebra": L.name, "superdim": str(L.superdim), "out": args.out, "written": digest(text)},
    )
    _emit(report, args)
    return EXIT_OK


def cmd_recognize(args: argparse.Namespace) -> int:
    L, source = load_algebra(args.source)
    _emit(recognition_report(L, source), args)
    return EXIT_OK


def cmd_capable(args: argparse.Namespace) -> int:
    L, source = load_algebra(args.source)
    report, verdict = capability_report(L, args.oracle, args.class_bound, _limits(args), source)
    _emit(report, args)
    return _STATUS_EXIT[verdict.status]


def _formula_command(build: Callable[..., Report]) -> Callable[[argparse.Namespace], int]:
    def run(args: argparse.Namespace) -> int:
        L, source = load_algebra(args.source)
        report = build(L, args.oracle, args.class_bound, _limits(args), source)
        _emit(report, args)
        if report.comparison is not None and report.comparison.get("match") is False:
            return EXIT_CHECK
        return EXIT_OK

    return run


def cmd_table(args: argparse.Namespace) -> int:
    _emit(table_report(args.k), args)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    presentation, source = load_presentation(args.file)
    if args.class_bound is not None:
        presentation = presentation.with_class_bound(args.class_bound)
    _emit(oracle_report(args.quantity, presentation, _limits(args), source), args)
    return EXIT_OK


def cmd_reproduce(args: argparse.Namespace) -> int:
    settings = Settings.from_config()
    if args.jobs is not None:
        settings = replace(settings, jobs=args.jobs)
    if args.limit_dim is not None:
        settings = replace(settings, oracle_dim_ceiling=args.limit_dim)
    report = reproduce(settings)
    _emit(report, args)
    return EXIT_OK if passed(report) else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as canonical JSON")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    oracle_flags = argparse.ArgumentParser(add_help=False)
    oracle_flags.add_argument("--oracle", action="store_true", help="also run the Hopf-formula oracle")
    oracle_flags.add_argument("--class-bound", type=int, default=None, help="truncation class for the oracle")
    oracle_flags.add_argument("--limit-dim", type=int, default=None, help="largest algebra handed to the oracle")

    parser = argparse.ArgumentParser(prog="supercap", description="Multipliers and capability of Lie superalgebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the Lie superalgebra axioms")
    p.add_argument("source", help="interchange file or catalog tag")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("construct", parents=[common], help="write a catalog algebra in the interchange format")
    p.add_argument("tag", help="catalog tag, e.g. 'H(1,0)+A(1|0)'")
    p.add_argument("-o", "--out", default=None, help="output file (stdout when omitted)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("recognize", parents=[common], help="recognize an algebra with dim L' <= 1")
    p.add_argument("source")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("capable", parents=[common, oracle_flags], help="capability verdict")
    p.add_argument("source")
    p.set_defaults(func=cmd_capable)

    for name, build in (
        ("multiplier", multiplier_report),
        ("extsq", exterior_square_report),
        ("corank", corank_report),
    ):
        p = sub.add_parser(name, parents=[common, oracle_flags], help=f"{name} from the formulas")
        p.add_argument("source")
        p.set_defaults(func=_formula_command(build))

    p = sub.add_parser("table", parents=[common], help="algebras with dim L' = 1 of corank k")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("oracle", parents=[common], help="Hopf-formula oracle on a presentation file")
    p.add_argument("quantity", choices=sorted(ORACLE_QUANTITIES))
    p.add_argument("file", help="YAML presentation")
    p.add_argument("--class-bound", type=int, default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("reproduce", parents=[common], help="recompute every published value")
    p.add_argument("--jobs", type=int, default=None, help="worker processes")
    p.add_argument("--limit-dim", type=int, default=None, help="largest algebra handed to the oracle")
    p.set_defaults(func=cmd_reproduce)

    return parser


def _exit_code(exc: SupercapError) -> int:
    if isinstance(exc, OracleLimitError):
        return EXIT_LIMIT
    if isinstance(exc, (InvalidAlgebraError, ClassBoundError, ConsistencyError, ContractViolation)):
        return EXIT_CHECK
    if isinstance(exc, (InputError, NotAnIdealError, PreconditionError)):
        return EXIT_INPUT
    return EXIT_CHECK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = "DEBUG" if args.verbose else None
    for name in ("core", "cli"):
        get_logger(name, level)
    logger.debug("command %s", args.command)
    try:
        return args.func(args)
    except SupercapError as exc:
        logger.exception("%s: %s", type(exc).__name__, exc)
        return _exit_code(exc)
    except OSError as exc:
        logger.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
