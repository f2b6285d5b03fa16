"""Continued fractions of sqrt(f) and the torsion order of the divisor at infinity."""
from .expansion import (
    check_skew_symmetry,
    convergents,
    expand,
    pell_check,
    period_structure,
    torsion_order,
)
from .models import CFExpansion, ExpansionOutcome, NotPeriodicWithinBound, PeriodStructure, SkewSymmetry, SurdState

__all__ = [
    "expand",
    "torsion_order",
    "check_skew_symmetry",
    "convergents",
    "pell_check",
    "period_structure",
    "CFExpansion",
    "ExpansionOutcome",
    "NotPeriodicWithinBound",
    "PeriodStructure",
    "SkewSymmetry",
    "SurdState",
]
