"""Exact field and polynomial arithmetic over QQ and F_p."""
from .fields import QQ, Field, FieldElement, PrimeField, RationalField, parse_rational
from .operations import discriminant, divrem, is_squarefree, resultant, sqrt_polynomial_part
from .poly import NEG_INF, Degree, Poly

__all__ = [
    "QQ",
    "Field",
    "FieldElement",
    "PrimeField",
    "RationalField",
    "parse_rational",
    "Poly",
    "NEG_INF",
    "Degree",
    "divrem",
    "resultant",
    "discriminant",
    "is_squarefree",
    "sqrt_polynomial_part",
]
