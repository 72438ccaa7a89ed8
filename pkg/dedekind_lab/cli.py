#!/usr/bin/env python3
"""
Command-line harness for Dedekind Lab.

Evaluates sums, checks reciprocity, enumerates level sets, runs theorem
scans and the census, and benchmarks the two evaluators. Reports go to
standard output as a table, CSV or JSON; logs go to standard error.

Exit status: 0 on success, 1 on a domain error or any failed check,
2 on a usage error.
"""

import argparse
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from loguru import logger
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from dedekind_lab import config
from dedekind_lab.core import (
    DomainError,
    dedekind_fast,
    dedekind_naive,
    dedekind_reciprocity_rhs,
    format_rational,
    is_prime,
    parse_rational,
    rademacher_naive,
    rademacher_reciprocity_rhs,
)
from dedekind_lab.lab import export
from dedekind_lab.lab.bench import bench, checksums_agree, naive_scaling_ratio
from dedekind_lab.lab.identities import (
    verify_dedekind_reciprocity,
    verify_integrality,
    verify_rademacher_reciprocity,
)
from dedekind_lab.lab.levels import census, count_solutions, level_sets
from dedekind_lab.lab.models import (
    CommandRequest,
    Method,
    OutputFormat,
    Subcommand,
    VerifyTarget,
)
from dedekind_lab.lab.theorems import (
    corollary2_converse_failures,
    counterexample_fixtures,
    scan_theorem1,
    scan_theorem3,
    verify_corollary1,
    verify_corollary2,
    violations,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class LabArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reads negative rationals such as -13/16 as values, not flags."""

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/-?\d+)?$|^-\d*\.\d+$")


def _add_format(parser: argparse.ArgumentParser, default: Any) -> None:
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=default,
        help=f"Report format (default: {config.OUTPUT_FORMAT})"
    )


def _add_method(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--method",
        choices=[m.value for m in Method],
        default=Method.NAIVE.value,
        help="Evaluator for s(a, b) (default: naive)"
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser."""
    parser = LabArgumentParser(
        prog="dedekind-lab",
        description="Exact Dedekind and Dedekind-Rademacher sums, identity checks and level-set census"
    )
    _add_format(parser, config.OUTPUT_FORMAT)
    parser.add_argument(
        "--log-level",
        type=str.upper,
        default=config.LOG_LEVEL,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help=f"Logging level (default: {config.LOG_LEVEL})"
    )

    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("eval-s", help="Evaluate s(a, b)")
    p.add_argument("args", type=int, nargs=2, metavar="N", help="a b")
    _add_method(p)
    _add_format(p, argparse.SUPPRESS)

    p = sub.add_parser("eval-r", help="Evaluate r_n(a, b)")
    p.add_argument("args", type=int, nargs=3, metavar="N", help="n a b")
    _add_format(p, argparse.SUPPRESS)

    p = sub.add_parser("recip-check", help="Check s(a,b) + s(b,a) against its closed form")
    p.add_argument("args", type=int, nargs=2, metavar="N", help="a b")
    _add_format(p, argparse.SUPPRESS)

    p = sub.add_parser("recip-check-r", help="Check r_n(a,b) + r_n(b,a) against its closed form")
    p.add_argument("args", type=int, nargs=3, metavar="N", help="n a b")
    _add_format(p, argparse.SUPPRESS)

    p = sub.add_parser("classes", help="Level sets of s(., b) over the units mod b")
    p.add_argument("args", type=int, nargs=1, metavar="B", help="b")
    _add_method(p)
    _add_format(p, argparse.SUPPRESS)

    p = sub.add_parser("count", help="Number of units x mod b with s(x, b) = c")
    p.add_argument("args", type=int, nargs=1, metavar="B", help="b")
    p.add_argument("target", type=str, metavar="C", help="c as p/q")
    _add_method(p)
    _add_format(p, argparse.SUPPRESS)

    p = sub.add_parser("verify", help="Run a theorem scan or identity sweep")
    p.add_argument("check", choices=[t.value for t in VerifyTarget])
    p.add_argument("--b-max", dest="b_max", type=int, default=None)
    p.add_argument("--n-max", dest="n_max", type=int, default=None)
    p.add_argument("--p-max", dest="p_max", type=int, default=None)
    _add_format(p, argparse.SUPPRESS)

    p = sub.add_parser("census", help="Class-size statistics over a range of moduli")
    p.add_argument("--b-min", dest="b_min", type=int, required=True)
    p.add_argument("--b-max", dest="b_max", type=int, required=True)
    p.add_argument(
        "--workers",
        type=int,
        default=config.WORKERS,
        help=f"Worker processes (default: {config.WORKERS})"
    )
    _add_method(p)
    _add_format(p, argparse.SUPPRESS)

    p = sub.add_parser("bench", help="Time the naive and fast evaluators")
    p.add_argument("--bits", type=int, required=True, help="Bit length of every modulus")
    p.add_argument(
        "--trials",
        type=int,
        default=config.BENCH_TRIALS,
        help=f"Pairs per batch (default: {config.BENCH_TRIALS})"
    )
    p.add_argument("--seed", type=int, default=0, help="Seed of the input generator (default: 0)")
    p.add_argument(
        "--scaling",
        action="store_true",
        help="Also report the naive time ratio between moduli 2b and b"
    )
    _add_format(p, argparse.SUPPRESS)

    return parser


def build_request(namespace: argparse.Namespace) -> CommandRequest:
    """
    Turn parsed arguments into a validated CommandRequest.

    Raises:
        ValidationError: If arity or flag constraints fail
        DomainError: If the count target is not a rational
    """
    fields: Dict[str, Any] = {
        key: value
        for key, value in vars(namespace).items()
        if key != "log_level" and value is not None
    }
    if "target" in fields:
        fields["target"] = parse_rational(fields["target"])
    return CommandRequest(**fields)


def _configure_logging(level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level, format="{time:YYYY-MM-DD HH:mm:ss} | {level} | {message}")
    if config.LOG_DIR:
        logs_dir = Path(config.LOG_DIR)
        logs_dir.mkdir(parents=True, exist_ok=True)
        logger.add(
            logs_dir / "dedekind_lab_{time}.log",
            rotation="10 MB",
            level="INFO",
            format="{time:YYYY-MM-DD HH:mm:ss} | {level} | {message}"
        )


def _emit(header: List[str], rows: List[Dict[str, Any]], fmt: OutputFormat, title: str = "") -> None:
    if fmt == OutputFormat.CSV:
        sys.stdout.write(export.rows_to_csv(header, rows))
    elif fmt == OutputFormat.JSON:
        sys.stdout.write(export.serialize_to_json(rows) + "\n")
    else:
        table = Table(title=title or None)
        for name in header:
            table.add_column(name)
        for row in rows:
            table.add_row(*[export.format_cell(row[name]) for name in header])
        Console().print(table)


def _emit_value(labels: Dict[str, Any], value: str, fmt: OutputFormat) -> None:
    # A bare value in table mode, so `eval-s 37 40` prints just -13/16
    if fmt == OutputFormat.TABLE:
        print(value)
    else:
        _emit(list(labels) + ["value"], [{**labels, "value": value}], fmt)


def _summary(check: str, bound: str, failures: Sequence[Sequence[int]]) -> Dict[str, Any]:
    return {
        "check": check,
        "bound": bound,
        "failures": len(failures),
        "inputs": " ".join("(" + ",".join(str(x) for x in item) + ")" for item in failures),
    }


def _run_verify(request: CommandRequest) -> int:
    fmt = request.output_format
    check = request.check

    if check == VerifyTarget.THM1:
        reports = [report for b in range(1, request.b_max + 1) for report in scan_theorem1(b)]
        _emit(*export.report_rows(reports), fmt, title="Theorem 1 scan")
        return EXIT_FAILURE if violations(reports) else EXIT_OK

    if check == VerifyTarget.THM3:
        reports = [
            report
            for n in range(request.n_max + 1)
            for b in range(1, request.b_max + 1)
            for report in scan_theorem3(n, b)
        ]
        _emit(*export.report_rows(reports, with_n=True), fmt, title="Theorem 3 scan")
        return EXIT_FAILURE if violations(reports) else EXIT_OK

    if check == VerifyTarget.COR1:
        rows = [{"p": p, "holds": verify_corollary1(p)} for p in range(2, request.p_max + 1) if is_prime(p)]
        _emit(["p", "holds"], rows, fmt, title="Corollary 1")
        return EXIT_OK if all(row["holds"] for row in rows) else EXIT_FAILURE

    if check == VerifyTarget.COR2:
        rows = [
            {
                "p": p,
                "n": n,
                "holds": verify_corollary2(p, n),
                "converse_failures": len(corollary2_converse_failures(p, n)),
            }
            for p in range(2, request.p_max + 1)
            if is_prime(p)
            for n in range(request.n_max + 1)
        ]
        _emit(["p", "n", "holds", "converse_failures"], rows, fmt, title="Corollary 2 (necessary direction)")
        return EXIT_OK if all(row["holds"] for row in rows) else EXIT_FAILURE

    if check == VerifyTarget.FIXTURES:
        fixtures = counterexample_fixtures()
        _emit(*export.fixture_rows(fixtures), fmt, title="Counterexamples")
        return EXIT_OK if all(holds for _, holds in fixtures) else EXIT_FAILURE

    if check == VerifyTarget.RECIP:
        failures = verify_dedekind_reciprocity(request.b_max)
        bound = f"b_max={request.b_max}"
    elif check == VerifyTarget.RECIP_R:
        failures = verify_rademacher_reciprocity(request.b_max)
        bound = f"b_max={request.b_max}"
    else:
        failures = verify_integrality(request.b_max, request.n_max)
        bound = f"b_max={request.b_max} n_max={request.n_max}"
    _emit(["check", "bound", "failures", "inputs"], [_summary(check.value, bound, failures)], fmt)
    return EXIT_FAILURE if failures else EXIT_OK


def run(request: CommandRequest) -> int:
    """
    Dispatch a validated request and write its report.

    Returns:
        Exit status
    """
    fmt = request.output_format
    cmd = request.subcommand
    args = request.args
    logger.debug(f"Dispatching {cmd.value} {args}")

    if cmd == Subcommand.EVAL_S:
        a, b = args
        evaluate = dedekind_fast if request.method == Method.FAST else dedekind_naive
        _emit_value({"a": a, "b": b}, format_rational(evaluate(a, b)), fmt)
        return EXIT_OK

    if cmd == Subcommand.EVAL_R:
        n, a, b = args
        _emit_value({"n": n, "a": a, "b": b}, format_rational(rademacher_naive(n, a, b)), fmt)
        return EXIT_OK

    if cmd == Subcommand.RECIP_CHECK:
        a, b = args
        lhs = dedekind_naive(a, b) + dedekind_naive(b, a)
        rhs = dedekind_reciprocity_rhs(a, b)
        row = {"a": a, "b": b, "lhs": format_rational(lhs), "rhs": format_rational(rhs), "equal": lhs == rhs}
        _emit(["a", "b", "lhs", "rhs", "equal"], [row], fmt, title="Dedekind reciprocity")
        return EXIT_OK if lhs == rhs else EXIT_FAILURE

    if cmd == Subcommand.RECIP_CHECK_R:
        n, a, b = args
        rhs = rademacher_reciprocity_rhs(n, a, b)
        lhs = rademacher_naive(n, a, b) + rademacher_naive(n, b, a)
        row = {
            "n": n, "a": a, "b": b,
            "lhs": format_rational(lhs), "rhs": format_rational(rhs), "equal": lhs == rhs,
        }
        _emit(["n", "a", "b", "lhs", "rhs", "equal"], [row], fmt, title="Dedekind-Rademacher reciprocity")
        return EXIT_OK if lhs == rhs else EXIT_FAILURE

    if cmd == Subcommand.CLASSES:
        (b,) = args
        _emit(*export.level_rows(level_sets(b, request.method)), fmt, title=f"Level sets of s(., {b})")
        return EXIT_OK

    if cmd == Subcommand.COUNT:
        (b,) = args
        count = count_solutions(b, request.target, request.method)
        row = {"b": b, "c": format_rational(request.target), "count": count}
        _emit(["b", "c", "count"], [row], fmt)
        return EXIT_OK

    if cmd == Subcommand.VERIFY:
        return _run_verify(request)

    if cmd == Subcommand.CENSUS:
        rows = census(request.b_min, request.b_max, request.method, request.workers)
        _emit(*export.census_rows(rows), fmt, title="Level-set census")
        return EXIT_OK

    records = bench(request.bits, request.trials, request.seed)
    _emit(*export.bench_rows(records), fmt, title="Naive vs fast")
    if request.scaling:
        ratio = naive_scaling_ratio(request.bits, request.trials, request.seed)
        Console(stderr=True).print(f"naive time ratio 2b/b at {request.bits} bits: {ratio:.2f}")
    if not checksums_agree(records):
        logger.error("Checksums of the naive and fast evaluators differ")
        return EXIT_FAILURE
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, validate, dispatch. Returns the exit status."""
    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    _configure_logging(namespace.log_level)

    try:
        request = build_request(namespace)
    except (ValidationError, DomainError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return run(request)
    except DomainError as e:
        logger.error(f"{request.subcommand.value} {' '.join(str(a) for a in request.args)}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
