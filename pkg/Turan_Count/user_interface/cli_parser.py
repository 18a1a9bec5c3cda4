#! /usr/bin/env python3

import argparse
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from ..extension_mapping import ALIAS_TO_EXTENSION_MAP


@dataclass
class CLIArgs:
    """A dataclass to ensure correct typing of command line arguments"""

    command: str | None = None
    pattern: str | None = None
    host: str | None = None
    n: int | None = None
    q: int | None = None
    eps: str | None = None
    output_format: str | None = None
    out: Path | None = None
    threads: int | None = None
    seed: int | None = None
    log_level: str | None = None
    iters: int | None = None
    chains: int | None = None
    exhaustive: bool = False
    base_n: int | None = None
    n_min: int | None = None
    n_max: int | None = None
    s_max: int | None = None
    restarts: int | None = None
    verify: bool = False


def _common_options() -> argparse.ArgumentParser:
    """Options shared by every subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    # Output format.
    _ = common.add_argument(
        "--format",
        dest="output_format",
        help="Output format: text, json, csv (parquet with --out)",
        default="text",
    )
    # Output path.
    _ = common.add_argument("--out", help="Write the report to this file", type=Path)
    # Worker count.
    _ = common.add_argument(
        "--threads", help="Worker processes (default: all cores)", type=int
    )
    # RNG seed.
    _ = common.add_argument("--seed", help="RNG seed (default 0)", type=int, default=0)
    # Log level.
    _ = common.add_argument(
        "--log-level",
        help="Set the logging level (e.g., DEBUG, INFO, WARNING)",
        default="INFO",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="turan_count",
        description="Turan-Count: exact copy counts of colour-critical graphs above the Turán threshold",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    critical = subparsers.add_parser("critical", parents=[common], help="Analyse a pattern")
    _ = critical.add_argument("-F", "--pattern", required=True, help="Pattern spec")

    cnf = subparsers.add_parser("cnf", parents=[common], help="c(n, F) three ways")
    _ = cnf.add_argument("-F", "--pattern", required=True, help="Pattern spec")
    _ = cnf.add_argument("-n", type=int, required=True, help="Host order")

    count = subparsers.add_parser("count", parents=[common], help="Copies of F in a host")
    _ = count.add_argument("-F", "--pattern", required=True, help="Pattern spec")
    _ = count.add_argument("-H", "--host", required=True, help="Host graph spec")

    construct = subparsers.add_parser(
        "construct", parents=[common], help="Turán graph plus a matching"
    )
    _ = construct.add_argument("-F", "--pattern", required=True, help="Pattern spec")
    _ = construct.add_argument("-n", type=int, required=True, help="Host order")
    _ = construct.add_argument("-q", type=int, default=1, help="Matching size")

    audit = subparsers.add_parser("audit", parents=[common], help="Audit a host")
    _ = audit.add_argument("-F", "--pattern", required=True, help="Pattern spec")
    _ = audit.add_argument("-H", "--host", required=True, help="Host graph spec")
    _ = audit.add_argument("--eps", default="1/10", help="Epsilon as a rational, e.g. 1/10")
    _ = audit.add_argument("--restarts", type=int, default=32, help="Local search restarts")

    poly = subparsers.add_parser("poly", parents=[common], help="Interpolate c(n, F)")
    _ = poly.add_argument("-F", "--pattern", required=True, help="Pattern spec")
    _ = poly.add_argument("--base-n", dest="base_n", type=int, help="First sample n")

    search = subparsers.add_parser("search", parents=[common], help="Counterexample search")
    _ = search.add_argument("-F", "--pattern", required=True, help="Pattern spec")
    _ = search.add_argument("-n", type=int, required=True, help="Host order")
    _ = search.add_argument("-q", type=int, default=1, help="Edges above t_r(n)")
    _ = search.add_argument("--iters", type=int, default=10_000, help="Annealing steps")
    _ = search.add_argument("--chains", type=int, default=1, help="Independent chains")
    _ = search.add_argument(
        "--exhaustive", action="store_true", help="Scan every graph (capped at 10^7)"
    )

    lemma4 = subparsers.add_parser("lemma4", parents=[common], help="Part-size window scan")
    _ = lemma4.add_argument("--n-max", dest="n_max", type=int, default=24)
    _ = lemma4.add_argument("--s-max", dest="s_max", type=int, default=3)

    report = subparsers.add_parser("report", parents=[common], help="c(n, F) table")
    _ = report.add_argument("-F", "--pattern", required=True, help="Pattern spec")
    _ = report.add_argument("--n-min", dest="n_min", type=int, default=4)
    _ = report.add_argument("--n-max", dest="n_max", type=int, default=16)
    _ = report.add_argument(
        "--verify", action="store_true", help="Fail when formula or closed form disagree"
    )
    return parser


def parse_cli_arguments(argv: list[str] | None = None) -> CLIArgs:
    """
    Parse command line arguments.

    Returns:
        CLIArgs: Parsed CLI arguments
    """
    parser = build_parser()
    args = CLIArgs()
    # Parse arguments into the CLIArgs namespace.
    return parser.parse_args(argv, namespace=args)


def _check_format_supported(format: str) -> bool:
    """
    Check if a format is supported.
    """
    if format in ALIAS_TO_EXTENSION_MAP:
        return True
    else:
        logging.warning(f"Received invalid format: {format}")
        return False


def _map_format_to_extension(format: str) -> str:
    """
    Map a format to an extension.
    """
    return ALIAS_TO_EXTENSION_MAP[format]


def validate_format(format: str | None) -> str | None:
    """
    Validate a format string by checking its existence and support, then map it
    to its key (e.g. "js" -> "json"). Returns None for a missing or invalid format.
    """
    if not format:
        return None
    format = format.strip().lower()
    if not _check_format_supported(format):
        return None
    return _map_format_to_extension(format).lstrip(".").replace("txt", "text")


def parse_fraction(text: str) -> Fraction:
    """Parses '1/10' or '0.1' as an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Not a rational number: {text!r}") from None
