"""
Command-line front end.

    pyeop eop       --family hermite --partition 1,1 --route all
    pyeop classify  --family laguerre --alpha 3/2 --indices 1,2
    pyeop potential --family hermite --indices 1,2 --state 0 --grid=-3:3:61 --residual
    pyeop check     --suite all

Standard output carries only results (JSON lines, text or CSV); logs go to
standard error. Exit codes: 0 success, 1 check failure, 2 usage error.
"""

import argparse
import csv
import json
import logging
import sys
from decimal import ROUND_HALF_EVEN, Context
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import __version__
from .checks import SUITES, run_suites
from .classical import Family, FamilyKind
from .config import get_compute_config
from .darboux import ExtendedPotential, PotentialSpec, classify_regularity, schrodinger_residual
from .eop import EopResult, Route, eop_noumi_jt, eop_wronskian
from .exceptions import CheckFailure, EopError, ExitCodeMapper, ParseError, PreconditionError
from .kernel.jet import extended_context, to_mpf
from .kernel.rational import format_rational, parse_rational
from .observability import LoggingConfig, configure_logging, get_observability_manager
from .partitions import (
    Partition, SpectralIndices, indices_to_partition, partition_to_indices
)
from .schur import eop_gjt_confluent, eop_schur_confluent

logger = logging.getLogger(__name__)

ROUTES = {
    Route.WRONSKIAN: eop_wronskian,
    Route.NOUMI_JT: eop_noumi_jt,
    Route.SCHUR_CONFLUENT: eop_schur_confluent,
    Route.GJT_CONFLUENT: eop_gjt_confluent,
}

CSV_DIGITS = 30
_DECIMAL_CONTEXT = Context(prec=CSV_DIGITS, rounding=ROUND_HALF_EVEN)


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="pyeop",
        description="Exceptional orthogonal polynomials and Darboux-extended potentials."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log to stderr (-v info, -vv debug)")
    parser.add_argument("--log-json", action="store_true",
                        help="Structured JSON log lines")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--family", required=True, choices=[k.value for k in FamilyKind])
    family.add_argument("--alpha", help="Laguerre/Jacobi parameter as p/q")
    family.add_argument("--beta", help="Jacobi parameter as p/q")
    family.add_argument("--omega", default="1", help="Oscillator frequency as p/q")
    chain = family.add_mutually_exclusive_group(required=True)
    chain.add_argument("--partition", help='Partition, e.g. "3,2,2"')
    chain.add_argument("--indices", help='Deleted levels, e.g. "2,3,5"')

    commands = parser.add_subparsers(dest="command", required=True)

    eop = commands.add_parser("eop", parents=[family], help="Compute W_lambda by one or all routes")
    eop.add_argument("--route", default=Route.WRONSKIAN.value,
                     choices=[r.value for r in Route] + ["all"])
    eop.add_argument("--format", default="json", choices=["json", "text"])

    classify = commands.add_parser("classify", parents=[family],
                                   help="Krein-Adler prediction against the Sturm count")
    classify.add_argument("--format", default="json", choices=["json", "text"])

    potential = commands.add_parser("potential", parents=[family],
                                    help="Extended potential and eigenfunction on a grid (CSV)")
    potential.add_argument("--grid", required=True, help='Inclusive grid "a:b:n"')
    potential.add_argument("--state", type=int, required=True, help="Surviving level mu")
    potential.add_argument("--residual", action="store_true",
                           help="Add the Schrodinger residual column")

    check = commands.add_parser("check", help="Run acceptance suites")
    check.add_argument("--suite", default="all", choices=list(SUITES) + ["all"])
    check.add_argument("--max-weight", type=int, default=6)
    check.add_argument("--max-length", type=int, default=3)
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--format", default="json", choices=["json", "text"])

    return parser.parse_args(argv)


def _parse_optional(text: Optional[str]) -> Optional[Fraction]:
    return None if text is None else parse_rational(text)


def family_from_args(args: argparse.Namespace) -> Family:
    return Family(FamilyKind(args.family), _parse_optional(args.alpha),
                  _parse_optional(args.beta))


def partition_from_args(args: argparse.Namespace) -> Partition:
    if args.partition is not None:
        return Partition.parse(args.partition)
    return indices_to_partition(SpectralIndices.parse(args.indices))


def indices_from_args(args: argparse.Namespace) -> SpectralIndices:
    if args.indices is not None:
        return SpectralIndices.parse(args.indices)
    return partition_to_indices(Partition.parse(args.partition))


def polynomial_record(result: EopResult) -> Dict:
    """JSON record of one route; coefficients are W-normalized, ascending, as "p/q" strings."""
    return {
        "family": result.family.kind.value,
        "params": result.family.params,
        "partition": list(result.partition.parts),
        "route": result.route.value,
        "coefficients": [format_rational(c) for c in result.normalized.coefficients] or ["0"],
    }


def _emit(payload: Dict, output_format: str, text: str, out) -> None:
    if output_format == "json":
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(text + "\n")


def cmd_eop(args: argparse.Namespace, out) -> int:
    family = family_from_args(args)
    lam = partition_from_args(args)
    routes = list(Route) if args.route == "all" else [Route(args.route)]
    results = [ROUTES[route](family, lam) for route in routes]
    for result in results:
        _emit(polynomial_record(result), args.format,
              f"{result.route.value}: {result.normalized}", out)
    if args.route != "all":
        return ExitCodeMapper.SUCCESS
    agree = all(r.normalized == results[0].normalized for r in results[1:])
    _emit({"cross_check": "pass" if agree else "fail"}, args.format,
          f"cross-check: {'pass' if agree else 'fail'}", out)
    if not agree:
        raise CheckFailure(
            f"Routes disagree for {family} lambda=({lam})", suite="cross-route",
            context={"family": str(family), "partition": str(lam)}
        )
    return ExitCodeMapper.SUCCESS


def cmd_classify(args: argparse.Namespace, out) -> int:
    family = family_from_args(args)
    indices = indices_from_args(args)
    report = classify_regularity(family, indices)
    payload = {
        "family": family.kind.value,
        "params": family.params,
        "indices": list(indices.indices),
        "partition": list(report.partition.parts),
        "adler": report.predicted,
        "interior_roots": report.interior_roots,
        "lower_boundary_root": report.lower_boundary_root,
        "upper_boundary_root": report.upper_boundary_root,
        "regular": report.observed,
        "agree": report.agree,
    }
    text = (f"{family} N=({indices}) lambda=({report.partition}): adler={report.predicted} "
            f"interior_roots={report.interior_roots} agree={report.agree}")
    _emit(payload, args.format, text, out)
    if not report.agree:
        raise CheckFailure(
            f"Krein-Adler prediction and Sturm count disagree for N=({indices})",
            suite="krein-adler", context={"family": str(family), "indices": str(indices)}
        )
    return ExitCodeMapper.SUCCESS


def parse_grid(text: str) -> List[Fraction]:
    """
    ``"a:b:n"``: n equally spaced rational points from a to b inclusive.

    Raises:
        ParseError: If the text is malformed or n < 1
    """
    pieces = text.split(":")
    if len(pieces) != 3:
        raise ParseError(f"Grid must look like a:b:n, got {text!r}", text=text)
    lower, upper = parse_rational(pieces[0]), parse_rational(pieces[1])
    try:
        count = int(pieces[2])
    except ValueError as e:
        raise ExitCodeMapper.from_value_error(e, "grid", text)
    if count < 1:
        raise ParseError(f"Grid needs at least one point, got {count}", text=text)
    if count == 1:
        return [lower]
    step = (upper - lower) / (count - 1)
    return [lower + i * step for i in range(count)]


def format_decimal(value, ctx) -> str:
    """Scientific notation with 30 significant digits, rounded half to even."""
    if not value:
        return "0." + "0" * (CSV_DIGITS - 1) + "e+0"
    number = _DECIMAL_CONTEXT.create_decimal(ctx.nstr(value, 50))
    return f"{number:.{CSV_DIGITS - 1}e}"


def cmd_potential(args: argparse.Namespace, out) -> int:
    spec = PotentialSpec(family_from_args(args), parse_rational(args.omega))
    indices = indices_from_args(args)
    mu = args.state
    if mu < 0 or mu in indices:
        raise PreconditionError(
            f"State {mu} is not a surviving level of the chain ({indices})",
            context={"mu": mu, "indices": str(indices)}
        )
    grid = parse_grid(args.grid)
    extension = ExtendedPotential.from_chain(spec, indices)
    ctx = extended_context()
    tolerance = None
    if args.residual:
        tolerance = get_compute_config().residual_tolerance

    manager = get_observability_manager()
    perf = manager.create_performance_logger("potential_grid")
    perf.start(spec=str(spec), indices=str(indices), mu=mu, points=len(grid))
    header = ["x", "V_ext", "psi"] + (["residual"] if args.residual else [])
    rows: List[List[str]] = []
    worst = ctx.zero
    with manager.start_span("pyeop.potential.grid", spec=str(spec), indices=str(indices),
                            mu=mu) as span:
        try:
            for x in grid:
                row = [
                    format_decimal(to_mpf(x, ctx), ctx),
                    format_decimal(extension.value(x), ctx),
                    format_decimal(extension.eigenfunction(mu, x).value, ctx),
                ]
                if args.residual:
                    residual = schrodinger_residual(spec, indices, mu, [x])
                    worst = max(worst, residual)
                    row.append(format_decimal(residual, ctx))
                rows.append(row)
        except EopError as e:
            manager.record_span_exception(span, e)
            perf.error(e)
            raise
    perf.checkpoint("grid_evaluated", rows=len(rows))

    # Nothing reaches stdout unless every grid point evaluated
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    passed = tolerance is None or worst < tolerance
    perf.complete(success=passed, max_residual=ctx.nstr(worst, 5))
    if not passed:
        raise CheckFailure(
            f"Schrodinger residual {ctx.nstr(worst, 5)} exceeds {tolerance}",
            suite="residual", context={"spec": str(spec), "indices": str(indices), "mu": mu}
        )
    return ExitCodeMapper.SUCCESS


def cmd_check(args: argparse.Namespace, out) -> int:
    names = None if args.suite == "all" else [args.suite]
    reports = run_suites(names, args.max_weight, args.max_length, args.seed)
    passed = all(report.passed for report in reports)
    if args.format == "json":
        out.write(json.dumps({
            "suites": [report.to_dict() for report in reports],
            "passed": passed,
        }) + "\n")
    else:
        for report in reports:
            status = "PASS" if report.passed else "FAIL"
            out.write(f"{status} {report.suite}: {report.cases} cases, "
                      f"{len(report.failures)} failed ({report.duration:.2f}s)\n")
            for failure in report.failures:
                out.write(f"    {failure}\n")
    if not passed:
        failed = [report for report in reports if not report.passed]
        raise CheckFailure(
            f"{len(failed)} suite(s) failed: {', '.join(r.suite for r in failed)}",
            suite=failed[0].suite if len(failed) == 1 else None,
            failures=sum(len(r.failures) for r in failed)
        )
    return ExitCodeMapper.SUCCESS


COMMANDS = {
    "eop": cmd_eop,
    "classify": cmd_classify,
    "potential": cmd_potential,
    "check": cmd_check,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    args = parse_args(argv)
    out = out or sys.stdout
    level = {0: "WARNING", 1: "INFO"}.get(args.verbose, "DEBUG")
    configure_logging(LoggingConfig(structured=args.log_json, level=level), stream=sys.stderr)
    try:
        return COMMANDS[args.command](args, out)
    except EopError as e:
        logger.error(str(e), extra={"error_code": e.error_code, "context": e.context})
        sys.stderr.write(f"pyeop: {e}\n")
        return ExitCodeMapper.exit_code(e)


if __name__ == "__main__":
    sys.exit(main())
