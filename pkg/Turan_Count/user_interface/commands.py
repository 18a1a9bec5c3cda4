#! /usr/bin/env python3
"""
Subcommand implementations and report emission.

Every subcommand returns a CommandResult: the rows for json/csv/file output,
the text rendering, and the exit code (0 success, 1 diagnostic finding).
run_command ends through Settings.exit_program, so it always raises SystemExit
with the exit code.
"""

import csv
import io
import json
import sys
from collections.abc import Callable
from fractions import Fraction
from typing import Any, NamedTuple, NoReturn, TextIO

from ..analyzer import DEFAULT_EPSILON, audit_theorem
from ..coloring import CriticalPattern, analyze_pattern, chromatic_number, require_critical
from ..counting import count_copies
from ..exceptions import TuranCountError
from ..extension_mapping import ALLOWED_OUTPUT_EXTENSIONS
from ..extremal import (
    c_exact,
    closed_form_for,
    fit_gamma,
    interpolate_count_polynomial,
    lemma4_violations,
    lemma5_bounds,
    lemma5_formula,
    lemma5_formula_uncorrected,
    lemma6_gap,
    analytic_gamma_bound,
    report_rows,
    sharpness_construction,
)
from ..graph_core import PartSizes
from ..graph_io import serialize_graph6
from ..report_export import ReportExporter
from ..search import exhaustive_search, run_search_chains
from .cli_parser import CLIArgs, parse_cli_arguments
from .pattern_parser import PatternSpec, parse_pattern_spec
from .settings import EXIT_FINDING, EXIT_OK, EXIT_USAGE, Settings


class CommandResult(NamedTuple):
    rows: list[dict[str, Any]]
    text: str
    exit_code: int = EXIT_OK


def _na(value: Any) -> str:
    return "n/a" if value is None else str(value)


def _ratio(value: int, other: int | None) -> Fraction | None:
    """c_exact / other, or None when other is missing or zero."""
    return Fraction(value, other) if other else None


def _mismatch_lines(row: dict[str, Any]) -> list[str]:
    return [
        f"mismatch at n={row['n']}: c_exact/{key} = {row[f'{key}_ratio']}"
        for key in ("formula", "closed_form")
        if row[key] is not None and row[key] != row["c_exact"]
    ]


def _critical_spec(args: CLIArgs) -> tuple[PatternSpec, CriticalPattern]:
    spec = parse_pattern_spec(args.pattern or "")
    return spec, require_critical(spec.graph)


def critical_command(settings: Settings) -> CommandResult:
    spec = parse_pattern_spec(settings.args.pattern or "")
    pattern = analyze_pattern(spec.graph)
    if pattern is None:
        chi = chromatic_number(spec.graph)
        row = {"pattern": spec.name, "f": spec.graph.n, "chi": chi, "critical": False}
        return CommandResult([row], f"not r-critical: chi={chi}", EXIT_FINDING)
    row = {
        "pattern": spec.name,
        "f": pattern.f,
        "chi": pattern.chi,
        "r": pattern.r,
        "critical": True,
        "good_edges": len(pattern.good_edges),
        "good_edge_list": " ".join(f"{u}-{v}" for u, v in pattern.good_edges),
        "aut": pattern.aut,
    }
    text = (
        f"r-critical: r={pattern.r}, good edges: {len(pattern.good_edges)}, Aut={pattern.aut}"
    )
    return CommandResult([row], text)


def cnf_command(settings: Settings) -> CommandResult:
    spec, pattern = _critical_spec(settings.args)
    n = settings.args.n or 0
    value = c_exact(n, pattern)
    divisible = n % pattern.r == 0
    formula = lemma5_formula(n, pattern) if divisible else None
    uncorrected = lemma5_formula_uncorrected(n, pattern) if divisible else None
    closed = closed_form_for(spec.name, n)
    agree = all(other is None or other == value for other in (formula, closed))
    row = {
        "n": n,
        "pattern": spec.name,
        "c_exact": value,
        "formula": formula,
        "closed_form": closed,
        "formula_with_2^-f^2": uncorrected,
        "agree": agree,
        "formula_ratio": _ratio(value, formula),
        "closed_form_ratio": _ratio(value, closed),
    }
    text = f"c({n}, {spec.name}) = {value} (formula: {_na(formula)}, closed form: {_na(closed)})"
    if not agree:
        text += "\n" + "\n".join(_mismatch_lines(row))
    return CommandResult([row], text, EXIT_OK if agree else EXIT_FINDING)


def count_command(settings: Settings) -> CommandResult:
    pattern = parse_pattern_spec(settings.args.pattern or "")
    host = parse_pattern_spec(settings.args.host or "")
    result = count_copies(pattern.graph, host.graph, settings.threads)
    row = {
        "pattern": pattern.name,
        "host": host.name,
        "n": host.graph.n,
        "copies": result.copies,
        "injections": result.injections,
    }
    return CommandResult([row], f"copies: {result.copies}, injections: {result.injections}")


def construct_command(settings: Settings) -> CommandResult:
    spec, pattern = _critical_spec(settings.args)
    n, q = settings.args.n or 0, settings.args.q or 0
    host, report = sharpness_construction(n, pattern, q)
    row = report._asdict() | {"pattern": spec.name, "graph6": serialize_graph6(host)}
    text = "\n".join(
        [
            f"T_{pattern.r}({n}) + {q}-matching: {report.edges} edges",
            f"copies: {report.total_copies}, q*c(n,F): {report.bound}, excess: {report.excess}",
            f"graph6: {row['graph6']}",
        ]
    )
    return CommandResult([row], text)


def audit_command(settings: Settings) -> CommandResult:
    _, pattern = _critical_spec(settings.args)
    host = parse_pattern_spec(settings.args.host or "")
    report = audit_theorem(
        host.graph,
        pattern,
        settings.epsilon or DEFAULT_EPSILON,
        settings.seed,
        settings.args.restarts or 32,
        settings.threads,
    )
    row = report.to_json_dict()
    verdict = "pass" if report.passed else "FAIL"
    lines = [
        f"n={report.n}, r={report.r}, q={report.q}, s={report.s}",
        f"copies: {report.copies}, bound q*c(n,F): {report.bound} -> {verdict}",
        f"max vertex copies: {report.max_vertex_copies}, rich edges: {report.rich_edges}",
        f"partition: {report.partition_source}, |B|={report.bad_edges}, |M|={report.missing_pairs}",
        f"distribution: {'holds' if report.distribution_holds else 'fails'}, "
        f"heavy missing vertices: {report.heavy_missing_vertices}",
    ] + report.notes
    return CommandResult([row], "\n".join(lines), EXIT_OK if report.passed else EXIT_FINDING)


def poly_command(settings: Settings) -> CommandResult:
    spec, pattern = _critical_spec(settings.args)
    poly = interpolate_count_polynomial(pattern, settings.args.base_n, settings.threads)
    # Multipartite deficits at one deviation step around the base sample.
    base = pattern.r * max(4, -(-pattern.f // pattern.r) + 1)
    cases = []
    for i in range(1, pattern.r):
        sizes = [base // pattern.r] * pattern.r
        sizes[0] -= 1
        sizes[i] += 1
        parts = PartSizes(tuple(sizes))
        cases.append((parts, lemma6_gap(parts, pattern)))
    gamma = fit_gamma(cases, pattern.f)
    checks = [lemma5_bounds(poly, n, c_exact(n, pattern)) for n in (base, base + poly.valid_modulus)]
    row = {
        "pattern": spec.name,
        "polynomial": str(poly),
        "degree": poly.degree,
        "modulus": poly.valid_modulus,
        "alpha": poly.alpha,
        "beta": poly.beta,
        "gamma_fitted": gamma,
        "gamma_bound": analytic_gamma_bound(poly, pattern),
        "bounds_hold": all(close and sandwich for close, sandwich in checks),
    }
    text = "\n".join(
        [
            f"c(n, {spec.name}) = {poly} for n ≡ 0 mod {poly.valid_modulus}",
            f"alpha = {poly.alpha}, beta = {poly.beta}",
            f"gamma fitted = {gamma}, gamma bound = {row['gamma_bound']}",
        ]
    )
    return CommandResult([row], text)


def search_command(settings: Settings) -> CommandResult:
    spec, pattern = _critical_spec(settings.args)
    args = settings.args
    n, q = args.n or 0, args.q if args.q is not None else 1
    if args.exhaustive:
        state = exhaustive_search(n, pattern, q)
    else:
        state = run_search_chains(
            n, pattern, q, args.iters or 0, settings.seed, args.chains or 1, settings.threads
        )
    finding = state.below_bound_seen
    row = {
        "pattern": spec.name,
        "n": n,
        "q": q,
        "edges": state.target_edges,
        "mode": state.mode,
        "seed": state.seed,
        "steps": state.steps,
        "best_copies": state.best_copies,
        "bound": state.bound,
        "finding": finding,
        "graph6": serialize_graph6(state.best_graph),
    }
    label = (
        "below q*c(n,F): theorem false at this n or n below its threshold"
        if finding
        else "no graph below q*c(n,F) found"
    )
    text = "\n".join(
        [
            f"{state.mode}: best #F = {state.best_copies} with {state.target_edges} edges, "
            f"q*c(n,F) = {state.bound}",
            label,
            f"graph6: {row['graph6']}",
        ]
    )
    return CommandResult([row], text, EXIT_FINDING if finding else EXIT_OK)


def lemma4_command(settings: Settings) -> CommandResult:
    n_max = settings.args.n_max if settings.args.n_max is not None else 24
    s_max = settings.args.s_max if settings.args.s_max is not None else 3
    violations = lemma4_violations(n_max, (2, 3), range(s_max + 1))
    rows = [
        {"s": s, "r": r, "sizes": " ".join(map(str, sizes))} for s, r, sizes in violations
    ] or [{"n_max": n_max, "s_max": s_max, "violations": 0}]
    text = f"lemma4: {len(violations)} violations over n <= {n_max}, r in {{2,3}}, s <= {s_max}"
    return CommandResult(rows, text, EXIT_FINDING if violations else EXIT_OK)


def report_command(settings: Settings) -> CommandResult:
    spec, pattern = _critical_spec(settings.args)
    n_min = settings.args.n_min if settings.args.n_min is not None else 4
    n_max = settings.args.n_max if settings.args.n_max is not None else 16
    rows = [
        row._asdict()
        for row in report_rows(pattern, spec.name, range(n_min, n_max + 1), settings.threads)
    ]
    for row in rows:
        row["formula_ratio"] = _ratio(row["c_exact"], row["formula"])
        row["closed_form_ratio"] = _ratio(row["c_exact"], row["closed_form"])
    mismatches = [line for row in rows for line in _mismatch_lines(row)]
    lines = ["n,F,c_exact,formula,closed_form,alpha"] + [
        ",".join(_na(row[key]) for key in ("n", "pattern", "c_exact", "formula", "closed_form", "alpha"))
        for row in rows
    ]
    if settings.args.verify:
        lines += mismatches
    code = EXIT_FINDING if settings.args.verify and mismatches else EXIT_OK
    return CommandResult(rows, "\n".join(lines), code)


COMMANDS: dict[str, Callable[[Settings], CommandResult]] = {
    "critical": critical_command,
    "cnf": cnf_command,
    "count": count_command,
    "construct": construct_command,
    "audit": audit_command,
    "poly": poly_command,
    "search": search_command,
    "lemma4": lemma4_command,
    "report": report_command,
}


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    return value


def render(result: CommandResult, output_format: str) -> str:
    """Text, JSON or CSV rendering with stable key order."""
    if output_format == "json":
        rows = [{key: _plain(value) for key, value in row.items()} for row in result.rows]
        payload: Any = rows[0] if len(rows) == 1 else rows
        return json.dumps(payload, indent=2) + "\n"
    if output_format == "csv":
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=list(result.rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in result.rows:
            writer.writerow({key: "" if value is None else _plain(value) for key, value in row.items()})
        return buffer.getvalue()
    return result.text + "\n"


def emit(result: CommandResult, settings: Settings, stdout: TextIO) -> None:
    output_format = settings.output_format or "text"
    if settings.out_path is None:
        if output_format == "parquet":
            raise TuranCountError("parquet output needs --out.")
        stdout.write(render(result, output_format))
        return
    suffix = settings.out_path.suffix.lower()
    if suffix == ".txt" or (output_format == "text" and suffix not in ALLOWED_OUTPUT_EXTENSIONS):
        settings.out_path.write_text(render(result, "text"), encoding="utf-8")
        return
    exporter = ReportExporter()
    try:
        exporter.export_rows(result.rows, settings.out_path, output_format)
    finally:
        exporter.close_connection()


def run_command(argv: list[str] | None = None, stdout: TextIO | None = None) -> NoReturn:
    """Parses argv, runs the subcommand, emits the report and exits with its code."""
    args = parse_cli_arguments(argv)
    settings = Settings(args)
    if not settings.valid:
        settings.exit_program("Invalid --format or --eps.", "error", EXIT_USAGE)
    try:
        result = COMMANDS[args.command or ""](settings)
        emit(result, settings, stdout if stdout is not None else sys.stdout)
    except ValueError as error:
        settings.exit_program(str(error), "error", EXIT_USAGE)
    except OSError as error:
        settings.exit_program(f"I/O error: {error}", "error", EXIT_USAGE)
    except Exception as error:
        settings.exit_program(f"Unexpected {type(error).__name__}: {error}", "exception", EXIT_USAGE)
    if result.exit_code == EXIT_FINDING:
        settings.exit_program(f"{args.command}: diagnostic finding.", "warning", EXIT_FINDING)
    settings.exit_program(f"{args.command}: done.", "info", EXIT_OK)
