"""
Curve and construction-parameter models shared by the constructors, the
verification oracle and the CLI.
"""
import logging
from fractions import Fraction
from typing import Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.algebra.fields import QQ
from src.algebra.operations import discriminant
from src.algebra.poly import Poly
from src.algebra.serialization import JsonPoly, JsonRational
from src.core.exceptions import AlgebraError, ConstructionError, DegenerateCurveError, UsageError

logger = logging.getLogger(__name__)


class ConstructionParams(BaseModel):
    """(alpha, beta, gamma) with a1, r, u of those degrees and 2a + 2b + c = g + 1."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    alpha: int
    beta: int
    gamma: int
    a1: JsonPoly
    r: JsonPoly
    u: JsonPoly
    genus: int

    @model_validator(mode="after")
    def _check_degrees(self) -> "ConstructionParams":
        if self.alpha < 1 or self.beta < 1 or self.gamma < 0:
            raise ValueError(f"need alpha, beta >= 1 and gamma >= 0, got ({self.alpha}, {self.beta}, {self.gamma})")
        if 2 * self.alpha + 2 * self.beta + self.gamma != self.genus + 1:
            raise ValueError(f"2*alpha + 2*beta + gamma must equal g+1 = {self.genus + 1}")
        for name, poly, expected in (("a1", self.a1, self.alpha), ("r", self.r, self.beta), ("u", self.u, self.gamma)):
            if poly.field != QQ:
                raise ValueError(f"{name} must be a polynomial over QQ")
            if poly.degree != expected:
                raise ValueError(f"deg {name} = {poly.degree}, expected {expected}")
        return self

    @property
    def triple(self) -> tuple:
        return (self.alpha, self.beta, self.gamma)

    @property
    def predicted_order(self) -> int:
        return self.genus + 1 + 6 * self.alpha + 3 * self.beta + self.gamma


def construction_params(alpha: int, beta: int, gamma: int, a1: Poly, r: Poly, u: Poly, genus: Optional[int] = None) -> ConstructionParams:
    """Validated ConstructionParams; the genus defaults to 2a + 2b + c - 1."""
    if genus is None:
        genus = 2 * alpha + 2 * beta + gamma - 1
    try:
        return ConstructionParams(alpha=alpha, beta=beta, gamma=gamma, a1=a1, r=r, u=u, genus=genus)
    except ValidationError as e:
        raise UsageError(f"Invalid construction parameters: {e.errors()[0]['msg']}", error_code="invalid_construction") from e


class HyperellipticCurve(BaseModel):
    """y^2 = f(x), deg f = 2g+2, f squarefree with square leading coefficient."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    label: str
    genus: int
    params: Dict[str, JsonRational] = Field(default_factory=dict)
    f: JsonPoly
    predicted_order: Optional[int] = None
    discriminant: JsonRational
    construction: Optional[ConstructionParams] = None

    @model_validator(mode="after")
    def _check_curve(self) -> "HyperellipticCurve":
        if self.f.degree != 2 * self.genus + 2:
            raise ValueError(f"deg f = {self.f.degree}, expected 2g+2 = {2 * self.genus + 2}")
        if not QQ.is_square(self.f.lc):
            raise ValueError(f"leading coefficient {self.f.lc} is not a rational square")
        if self.discriminant == 0:
            raise ValueError("zero discriminant")
        return self


class CertifiedCurve(HyperellipticCurve):
    """A curve tagged with the torsion order found by its continued fraction."""

    certified_order: int


def build_curve(
    label: str,
    genus: int,
    f: Poly,
    predicted_order: Optional[int] = None,
    params: Optional[Dict[str, Fraction]] = None,
    construction: Optional[ConstructionParams] = None,
) -> HyperellipticCurve:
    """
    Validate a specialization and wrap it. Degenerate specializations are
    rejected, never repaired.
    """
    if f.degree != 2 * genus + 2:
        raise DegenerateCurveError(
            f"degree defect: deg f = {f.degree}, expected {2 * genus + 2}",
            extra={"label": label, "params": {k: str(v) for k, v in (params or {}).items()}},
        )
    if not QQ.is_square(f.lc):
        raise ConstructionError(f"leading coefficient {f.lc} is not a rational square", error_code="leading_not_square")
    disc = discriminant(f)
    if disc == 0:
        raise DegenerateCurveError(
            "zero discriminant: not a curve of genus {}".format(genus),
            extra={"label": label, "params": {k: str(v) for k, v in (params or {}).items()}},
        )
    logger.debug(f"Built {label} (genus {genus}) with discriminant {disc}")
    return HyperellipticCurve(
        label=label,
        genus=genus,
        params=params or {},
        f=f,
        predicted_order=predicted_order,
        discriminant=disc,
        construction=construction,
    )


def load_curve(text: str) -> HyperellipticCurve:
    """Parse curve JSON and re-validate it from f (the discriminant is recomputed)."""
    try:
        doc = HyperellipticCurve.model_validate_json(text)
    except ValidationError as e:
        raise UsageError(f"Invalid curve document: {e.errors()[0]['msg']}", error_code="invalid_curve") from e
    except AlgebraError as e:
        raise UsageError(f"Invalid curve document: {e.detail}", error_code="invalid_curve") from e
    rebuilt = build_curve(doc.label, doc.genus, doc.f, doc.predicted_order, dict(doc.params), doc.construction)
    if rebuilt.discriminant != doc.discriminant:
        logger.warning(f"Curve {doc.label}: stored discriminant differs from recomputed value; using recomputed")
    return rebuilt
