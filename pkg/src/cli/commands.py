"""
Command-line front end. Each subcommand writes exactly one JSON document to
standard output (a JSON Lines stream for `search`); logs and JSON error
documents go to standard error.

Exit codes: 0 success, 1 mathematical failure, 2 usage error.
"""
import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel

from src.algebra.fields import parse_rational
from src.algebra.poly import Poly
from src.cli.poly_parser import parse_poly
from src.construct.families import FAMILIES, builtin_family
from src.construct.models import HyperellipticCurve, construction_params, load_curve
from src.construct.search import parse_grid, search
from src.construct.theorem import quartic_family, theorem_curve
from src.contfrac.expansion import expand, pell_check
from src.contfrac.models import CFExpansion, ExpansionOutcome
from src.core.config import settings
from src.core.exceptions import (
    EXIT_MATH_FAILURE,
    AlgebraError,
    HyperTorsionError,
    NotPeriodicError,
    UsageError,
)
from src.galois.certify import certify_symmetric, simplicity_report
from src.jacobian_fp.oracle import certify_order
from src.selftest import FixtureManager, SelfTestRunner

logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """argparse that raises UsageError so every failure reaches stderr as JSON."""

    def error(self, message: str) -> None:
        raise UsageError(f"{self.prog}: {message}", error_code="bad_arguments")


# --- Input helpers ---

def _read_text(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    path = Path(value)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    return value


def _first_document(text: str) -> str:
    # a search stream may be piped in; its first line is a complete curve
    stripped = text.strip()
    return stripped.splitlines()[0] if stripped.startswith("{") and "\n" in stripped else stripped


def load_polynomial(value: str) -> Poly:
    """Polynomial text, a coefficient list, or a curve document (its f); `-` reads stdin."""
    text = _first_document(_read_text(value))
    if text.startswith("{"):
        return load_curve(text).f
    if text.startswith("["):
        try:
            coeffs = json.loads(text)
        except json.JSONDecodeError as e:
            raise UsageError(f"Bad coefficient list: {e}", error_code="bad_coefficients") from e
        if not isinstance(coeffs, list):
            raise UsageError("A coefficient list must be a JSON array", error_code="bad_coefficients")
        try:
            return Poly.from_strings([str(c) for c in coeffs])
        except AlgebraError as e:
            raise UsageError(f"Bad coefficient list: {e.detail}", error_code="bad_coefficients") from e
    return parse_poly(text)


def load_curve_argument(value: str) -> HyperellipticCurve:
    text = _first_document(_read_text(value))
    if not text.startswith("{"):
        raise UsageError("expected a curve JSON document", error_code="invalid_curve")
    return load_curve(text)


def _parse_params(items: Sequence[str]) -> Dict[str, Fraction]:
    params: Dict[str, Fraction] = {}
    for item in items:
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or not name:
            raise UsageError(f"Bad parameter {item!r}; expected name=value", error_code="bad_parameter")
        if name in params:
            raise UsageError(f"Parameter {name!r} given twice", error_code="bad_parameter")
        try:
            params[name] = parse_rational(value)
        except AlgebraError as e:
            raise UsageError(f"Bad value for {name}: {e.detail}", error_code="bad_parameter") from e
    return params


def _emit(doc: BaseModel) -> None:
    sys.stdout.write(doc.model_dump_json() + "\n")
    sys.stdout.flush()


def _order_bound(f: Poly, requested: Optional[int]) -> int:
    if requested is not None:
        if requested < 1:
            raise UsageError(f"--max-order must be positive, got {requested}", error_code="bad_bound")
        return requested
    if f.is_zero or f.degree < 4 or f.degree % 2:
        raise UsageError(f"deg f must be 2g+2 with g >= 1, got {f.degree}", error_code="bad_degree")
    return settings.default_order_bound(f.degree // 2 - 1)


def _require_periodic(outcome: ExpansionOutcome) -> CFExpansion:
    if not isinstance(outcome, CFExpansion):
        raise NotPeriodicError(extra={"steps": outcome.steps, "degree_sum": outcome.degree_sum, "bound": outcome.bound})
    return outcome


# --- Subcommands ---

def cmd_expand(args: argparse.Namespace) -> int:
    f = load_polynomial(args.f)
    outcome = expand(f, _order_bound(f, args.max_order))
    _emit(outcome)
    _require_periodic(outcome)
    return 0


class OrderReport(BaseModel):
    order: int
    genus: int
    quasi_period: int
    period: int
    pell_constant: str


def cmd_order(args: argparse.Namespace) -> int:
    f = load_polynomial(args.f)
    outcome = expand(f, _order_bound(f, args.max_order))
    if not isinstance(outcome, CFExpansion):
        _emit(outcome)
        _require_periodic(outcome)
    constant = pell_check(f, outcome)
    _emit(OrderReport(
        order=outcome.order,
        genus=outcome.genus,
        quasi_period=outcome.quasi_period,
        period=outcome.period,
        pell_constant=str(constant),
    ))
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    if args.kind == "quartic":
        missing = [flag for flag, value in (("--a1", args.a1), ("--r", args.r), ("--q", args.q)) if value is None]
        if missing:
            raise UsageError(f"quartic construction needs {', '.join(missing)}", error_code="missing_flag")
        curve = quartic_family(parse_poly(args.a1), parse_poly(args.r), parse_poly(args.q))
    else:
        flags = (("--alpha", args.alpha), ("--beta", args.beta), ("--gamma", args.gamma), ("--a1", args.a1), ("--r", args.r), ("--u", args.u))
        missing = [flag for flag, value in flags if value is None]
        if missing:
            raise UsageError(f"theorem construction needs {', '.join(missing)}", error_code="missing_flag")
        params = construction_params(
            args.alpha, args.beta, args.gamma,
            a1=parse_poly(args.a1), r=parse_poly(args.r), u=parse_poly(args.u),
            genus=args.g,
        )
        curve = theorem_curve(params)
    _emit(curve)
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    _emit(builtin_family(args.label, _parse_params(args.param)))
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    grid = parse_grid(args.grid)
    progress = False if args.no_progress else None
    for line in search(args.label, grid, jobs=args.jobs, progress=progress):
        sys.stdout.write(line + "\n")
        sys.stdout.flush()
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    curve = load_curve_argument(args.curve)
    order = args.order if args.order is not None else curve.predicted_order
    if order is None:
        raise UsageError("--order is required when the curve carries no predicted order", error_code="missing_flag")
    certificate = certify_order(curve, order, args.primes, args.search_bound)
    _emit(certificate)
    return 0 if certificate.passed else EXIT_MATH_FAILURE


def cmd_galois(args: argparse.Namespace) -> int:
    if (args.poly is None) == (args.curve is None):
        raise UsageError("give exactly one of --poly and --curve", error_code="bad_arguments")
    if args.curve is not None:
        _emit(simplicity_report(load_curve_argument(args.curve), args.bound))
    else:
        _emit(certify_symmetric(load_polynomial(args.poly), args.bound))
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    runner = SelfTestRunner(FixtureManager(args.fixtures))
    report = runner.run(args.suite)
    _emit(report)
    return 0 if report.passed else EXIT_MATH_FAILURE


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="hypertorsion", description="Hyperelliptic curves with torsion at infinity.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument("--log-level", default=None, help="log level for standard error")
    parser.add_argument("--debug", action="store_true", help="extra internal consistency checks")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, handler, help_text in (
        ("expand", cmd_expand, "continued fraction of sqrt(f)"),
        ("order", cmd_order, "torsion order of the divisor at infinity"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--f", required=True, help="polynomial text, a file, or - for stdin")
        p.add_argument("--max-order", type=int, default=None)
        p.set_defaults(handler=handler)

    p = sub.add_parser("construct", help="build a curve from construction parameters")
    p.add_argument("--kind", choices=("theorem", "quartic"), default="theorem")
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--gamma", type=int)
    p.add_argument("--a1")
    p.add_argument("--r")
    p.add_argument("--u")
    p.add_argument("--q")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("family", help="specialize a built-in family")
    p.add_argument("--label", required=True, choices=sorted(FAMILIES))
    p.add_argument("--param", action="append", default=[], help="name=value, repeatable")
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("search", help="grid search over a built-in family (JSON Lines)")
    p.add_argument("--label", required=True, choices=sorted(FAMILIES))
    p.add_argument("--grid", action="append", default=[], help="name=lo..hi[:step], repeatable")
    p.add_argument("--jobs", type=int, default=settings.DEFAULT_JOBS)
    p.add_argument("--no-progress", action="store_true")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("verify", help="certify the order of D_inf modulo primes")
    p.add_argument("--curve", required=True, help="curve JSON file or - for stdin")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--primes", type=int, default=settings.CERTIFICATE_PRIMES)
    p.add_argument("--search-bound", type=int, default=settings.PRIME_SEARCH_BOUND)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("galois", help="certify an S_n or A_n Galois group")
    p.add_argument("--poly", default=None)
    p.add_argument("--curve", default=None)
    p.add_argument("--bound", type=int, default=settings.GALOIS_PRIME_BOUND)
    p.set_defaults(handler=cmd_galois)

    p = sub.add_parser("selftest", help="run the fixture suites")
    p.add_argument("--fixtures", default=str(settings.FIXTURES_DIR))
    p.add_argument("--suite", default=None)
    p.set_defaults(handler=cmd_selftest)
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    level = "DEBUG" if args.verbose else (args.log_level or settings.LOG_LEVEL).upper()
    if level not in {"CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"}:
        raise UsageError(f"Unknown log level: {args.log_level}", error_code="bad_arguments")
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    debug = settings.DEBUG
    try:
        args = build_parser().parse_args(argv)
        _configure_logging(args)
        settings.DEBUG = debug or args.debug
        logger.debug(f"Running {args.command}")
        return args.handler(args)
    except HyperTorsionError as e:
        sys.stderr.write(json.dumps(e.to_dict()) + "\n")
        return e.exit_code
    finally:
        settings.DEBUG = debug
