"""
Pydantic field types for exact values: polynomials travel as ascending lists of
coefficient strings, rationals as "num/den" (denominator omitted when 1).
"""
from fractions import Fraction
from typing import Annotated, Any, List

from pydantic import BeforeValidator, PlainSerializer

from src.algebra.fields import QQ, FieldElement, parse_rational
from src.algebra.poly import Poly


def _to_poly(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return Poly.from_strings([str(c) for c in value], QQ)
    return value


def _to_fraction(value: Any) -> Any:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


def _parse_element(value: Any) -> Any:
    return parse_rational(value) if isinstance(value, str) else value


def _poly_strings(p: Poly) -> List[str]:
    return p.to_strings()


def _element_string(value: FieldElement) -> str:
    return str(value)


JsonPoly = Annotated[Poly, BeforeValidator(_to_poly), PlainSerializer(_poly_strings, return_type=List[str])]
JsonRational = Annotated[Fraction, BeforeValidator(_to_fraction), PlainSerializer(_element_string, return_type=str)]
JsonFieldElement = Annotated[Any, BeforeValidator(_parse_element), PlainSerializer(_element_string, return_type=str)]
