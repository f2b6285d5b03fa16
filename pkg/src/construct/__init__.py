"""Curves with rational torsion at infinity of prescribed order."""
from .families import FAMILIES, FamilySpec, builtin_family, family_spec
from .models import (
    CertifiedCurve,
    ConstructionParams,
    HyperellipticCurve,
    build_curve,
    construction_params,
    load_curve,
)
from .search import certify_point, grid_points, parse_grid, search
from .theorem import (
    achievable_orders,
    partitions,
    quartic_family,
    quartic_polynomial,
    random_params,
    random_poly,
    solve_diophantine,
    theorem_curve,
    theorem_polynomial,
)

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "builtin_family",
    "family_spec",
    "CertifiedCurve",
    "ConstructionParams",
    "HyperellipticCurve",
    "build_curve",
    "construction_params",
    "load_curve",
    "certify_point",
    "grid_points",
    "parse_grid",
    "search",
    "achievable_orders",
    "partitions",
    "quartic_family",
    "quartic_polynomial",
    "random_params",
    "random_poly",
    "solve_diophantine",
    "theorem_curve",
    "theorem_polynomial",
]
