"""
Explicit one- to three-parameter families, written out polynomial by
polynomial rather than routed through theorem_curve so the two paths can be
checked against each other.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Mapping, Optional, Tuple

from src.algebra.fields import QQ
from src.algebra.poly import Poly
from src.construct.models import ConstructionParams, HyperellipticCurve, build_curve, construction_params
from src.core.exceptions import MissingParameterError, UsageError

logger = logging.getLogger(__name__)

Params = Dict[str, Fraction]


def _x() -> Poly:
    return Poly.x(QQ)


def _c(value: Fraction) -> Poly:
    return Poly.constant(value, QQ)


# --- Verbatim defining polynomials ---

def _ct10(p: Params) -> Poly:
    x, t = _x(), p["t"]
    w = x * x + t
    return (2 * w * w + w + 1) ** 2 + 4 * (2 * w + 1)


def _c13(p: Params) -> Poly:
    x, u, t = _x(), p["u"], p["t"]
    return (x + t) ** 2 * (2 * t + u + x + u * (x + t) * (x + 2 * t) ** 2) ** 2 + 4 * (t + x + u * (x + t) ** 2 * (x + 2 * t))


def _c15(p: Params) -> Poly:
    x, s, t = _x(), p["s"], p["t"]
    return (x + t) ** 2 * (x + (x - s) * (1 + x * x * (x + t))) ** 2 + 4 * (t + x + x * (x - s) * (x + t) ** 2)


def _c17(p: Params) -> Poly:
    x, s, t = _x(), p["s"], p["t"]
    return 4 * (t + x + x * (t + x) ** 2 * (x * x + s)) + (x + t) ** 2 * (x + (x * x + s) * (1 + x * x * (x + t))) ** 2


def _c18(p: Params) -> Poly:
    x, s, t, u = _x(), p["s"], p["t"], p["u"]
    w = x * x + s
    return w ** 2 * (t + u + x + u * (x + t) ** 2 * w) ** 2 + 4 * (s + x * x + u * (x + t) * w ** 2)


def _c21(p: Params) -> Poly:
    x, s, t, u = _x(), p["s"], p["t"], p["u"]
    w = x * x + t
    return 4 * (s + x + u * (x + s) ** 2 * w) + (x + s) ** 2 * (t + u + x * x + u * (x + s) * w ** 2) ** 2


# --- Construction data (a1, r, u) behind each family ---

def _c13_data(p: Params) -> ConstructionParams:
    x = _x()
    return construction_params(1, 1, 0, a1=x + 2 * p["t"], r=x + p["t"], u=_c(p["u"]), genus=3)


def _c15_data(p: Params) -> ConstructionParams:
    x = _x()
    return construction_params(1, 1, 1, a1=x, r=x + p["t"], u=x - p["s"], genus=4)


def _c17_data(p: Params) -> ConstructionParams:
    x = _x()
    return construction_params(1, 1, 2, a1=x, r=x + p["t"], u=x * x + p["s"], genus=5)


def _c18_data(p: Params) -> ConstructionParams:
    x = _x()
    return construction_params(1, 2, 0, a1=x + p["t"], r=x * x + p["s"], u=_c(p["u"]), genus=5)


def _c21_data(p: Params) -> ConstructionParams:
    x = _x()
    return construction_params(2, 1, 0, a1=x * x + p["t"], r=x + p["s"], u=_c(p["u"]), genus=5)


@dataclass(frozen=True)
class FamilySpec:
    label: str
    keys: Tuple[str, ...]
    genus: int
    order: int
    polynomial: Callable[[Params], Poly]
    construction: Optional[Callable[[Params], ConstructionParams]] = None
    description: str = ""


FAMILIES: Dict[str, FamilySpec] = {
    spec.label: spec
    for spec in (
        FamilySpec("Ct10", ("t",), 3, 10, _ct10, None, "quasi-period four, a1 = x^2 + t, r = 2, q = 1"),
        FamilySpec("C13", ("u", "t"), 3, 13, _c13, _c13_data, "(1,1,0): a1 = x + 2t, r = x + t"),
        FamilySpec("C15", ("s", "t"), 4, 15, _c15, _c15_data, "(1,1,1): a1 = x, r = x + t, u = x - s"),
        FamilySpec("C17", ("s", "t"), 5, 17, _c17, _c17_data, "(1,1,2): a1 = x, r = x + t, u = x^2 + s"),
        FamilySpec("C18", ("s", "t", "u"), 5, 18, _c18, _c18_data, "(1,2,0): a1 = x + t, r = x^2 + s"),
        FamilySpec("C21", ("s", "t", "u"), 5, 21, _c21, _c21_data, "(2,1,0): a1 = x^2 + t, r = x + s"),
    )
}


def family_spec(label: str) -> FamilySpec:
    try:
        return FAMILIES[label]
    except KeyError:
        raise UsageError(
            f"Unknown family {label!r}; expected one of {', '.join(FAMILIES)}", error_code="unknown_family"
        ) from None


def builtin_family(label: str, params: Mapping[str, Fraction]) -> HyperellipticCurve:
    """
    Specialize a built-in family at rational parameter values.

    Raises:
        UsageError: unknown label or unexpected parameter names.
        MissingParameterError: a parameter of the family is not supplied.
        DegenerateCurveError: the specialization drops degree or has zero discriminant.
    """
    spec = family_spec(label)
    missing = [k for k in spec.keys if k not in params]
    if missing:
        raise MissingParameterError(f"{label} needs parameters {', '.join(spec.keys)}; missing {', '.join(missing)}")
    unexpected = sorted(set(params) - set(spec.keys))
    if unexpected:
        raise UsageError(f"{label} takes no parameters named {', '.join(unexpected)}", error_code="unexpected_parameter")
    values = {k: QQ.convert(params[k]) for k in spec.keys}
    logger.debug(f"Specializing {label} at " + ", ".join(f"{k}={v}" for k, v in values.items()))

    f = spec.polynomial(values)
    curve = build_curve(label, spec.genus, f, spec.order, values)
    if spec.construction is None:
        return curve
    # only reached for nondegenerate specializations, where every degree is exact
    return curve.model_copy(update={"construction": spec.construction(values)})
