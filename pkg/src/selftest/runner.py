"""
Selftest runner: dispatches every fixture step to its check handler and
compares the observed values with the step's expectation.
"""
import logging
from fractions import Fraction
from typing import Any, Callable, Dict, Optional

from src.algebra.fields import parse_rational
from src.algebra.operations import discriminant
from src.cli.poly_parser import parse_poly
from src.construct.families import builtin_family
from src.construct.models import HyperellipticCurve, construction_params
from src.construct.theorem import partitions, quartic_family, theorem_curve
from src.contfrac.expansion import expand, pell_check, torsion_order
from src.core.config import settings
from src.core.exceptions import HyperTorsionError
from src.galois.certify import simplicity_report
from src.jacobian_fp.oracle import certify_order

from .fixture import SelfTestReport, Step, StepResult
from .manager import FixtureManager

logger = logging.getLogger(__name__)

Observed = Dict[str, Any]


def _params(raw: Dict[str, Any]) -> Dict[str, Fraction]:
    return {k: parse_rational(str(v)) for k, v in raw.items()}


def _family(data: Dict[str, Any]) -> HyperellipticCurve:
    return builtin_family(data["label"], _params(data.get("params", {})))


def _expansion_summary(curve: HyperellipticCurve) -> Observed:
    e = expand(curve.f, settings.default_order_bound(curve.genus))
    order = torsion_order(e)
    return {
        "order": order,
        "quasi_period": e.quasi_period,
        "period": e.period,
        "skew": str(e.skew),
        "pell_constant": str(pell_check(curve.f, e)),
    }


def check_order(data: Dict[str, Any]) -> Observed:
    return _expansion_summary(_family(data))


def check_degenerate(data: Dict[str, Any]) -> Observed:
    try:
        _family(data)
    except HyperTorsionError as e:
        return {"error": e.error_code}
    return {"error": None}


def check_certify(data: Dict[str, Any]) -> Observed:
    cert = certify_order(_family(data), int(data["order"]), int(data.get("primes", settings.CERTIFICATE_PRIMES)))
    return {"passed": cert.passed, "primes": [c.p for c in cert.primes]}


def check_simplicity(data: Dict[str, Any]) -> Observed:
    report = simplicity_report(_family(data), data.get("bound"))
    return {
        "verdict": report.certificate.verdict,
        "n": report.certificate.n,
        "absolutely_simple": report.absolutely_simple,
    }


def check_partitions(data: Dict[str, Any]) -> Observed:
    return {"triples": [list(t) for t in partitions(int(data["g"]), int(data["N"]))]}


def check_discriminant_ratio(data: Dict[str, Any]) -> Observed:
    """disc(f_t) / ((1+t)(5+5t+4t^3)) across the Ct10 family."""
    ratios = set()
    for raw in data["t"]:
        t = parse_rational(str(raw))
        curve = builtin_family("Ct10", {"t": t})
        ratios.add(discriminant(curve.f) / ((1 + t) * (5 + 5 * t + 4 * t ** 3)))
    return {"constant": str(ratios.pop()) if len(ratios) == 1 else "varies"}


def check_construct(data: Dict[str, Any]) -> Observed:
    if data.get("kind", "theorem") == "quartic":
        curve = quartic_family(parse_poly(data["a1"]), parse_poly(data["r"]), parse_poly(data["q"]))
    else:
        params = construction_params(
            int(data["alpha"]),
            int(data["beta"]),
            int(data["gamma"]),
            a1=parse_poly(data["a1"]),
            r=parse_poly(data["r"]),
            u=parse_poly(data["u"]),
            genus=data.get("g"),
        )
        curve = theorem_curve(params)
    summary = _expansion_summary(curve)
    summary["predicted_order"] = curve.predicted_order
    return summary


class SelfTestRunner:
    """
    Runs fixture suites against the check handlers, in suite and step order.
    """

    def __init__(self, manager: FixtureManager):
        self.manager = manager
        self.checks: Dict[str, Callable[[Dict[str, Any]], Observed]] = {
            "order": check_order,
            "degenerate": check_degenerate,
            "certify": check_certify,
            "simplicity": check_simplicity,
            "partitions": check_partitions,
            "discriminant_ratio": check_discriminant_ratio,
            "construct": check_construct,
        }

    def run_step(self, suite_name: str, step: Step) -> StepResult:
        handler = self.checks.get(step.check)
        if handler is None:
            return StepResult(suite=suite_name, step=step.name, check=step.check, passed=False, detail=f"unknown check '{step.check}'")
        logger.info(f"Executing step '{step.name}' with check '{step.check}'.")
        try:
            observed = handler(step.input)
        except HyperTorsionError as e:
            observed = {"error": e.error_code}
        mismatches = [
            f"{key}: expected {value!r}, observed {observed.get(key)!r}"
            for key, value in step.expected.items()
            if observed.get(key) != value
        ]
        return StepResult(
            suite=suite_name,
            step=step.name,
            check=step.check,
            passed=not mismatches,
            detail="; ".join(mismatches),
            observed=observed,
        )

    def run(self, suite_name: Optional[str] = None) -> SelfTestReport:
        names = [suite_name] if suite_name else self.manager.list_suites()
        results = []
        for name in names:
            suite = self.manager.get_suite(name)
            for step in suite.steps:
                result = self.run_step(name, step)
                if not result.passed:
                    logger.warning(f"{name}/{step.name} failed: {result.detail}")
                results.append(result)
        failed = sum(1 for r in results if not r.passed)
        return SelfTestReport(passed=failed == 0, total=len(results), failed=failed, results=results)
