"""
Continued fraction of y = sqrt(f) in k(x) by the exact surd recurrence, and
everything read off from it: torsion order of the divisor at infinity, skew
symmetry, period structure, convergents and the Pell identity.
"""
import logging
from typing import List, Optional, Tuple

from pydantic import ValidationError

from src.algebra.fields import QQ, Field, FieldElement, RationalField
from src.algebra.operations import is_squarefree, sqrt_polynomial_part
from src.algebra.poly import Poly
from src.contfrac.models import (
    CFExpansion,
    ExpansionOutcome,
    NotPeriodicWithinBound,
    PeriodStructure,
    SkewSymmetry,
    SurdState,
)
from src.core.config import settings
from src.core.exceptions import (
    ContinuedFractionError,
    NotPeriodicError,
    PellCertificationError,
    SkewSymmetryError,
)

logger = logging.getLogger(__name__)


# --- Surd recurrence ---

def _check_admissible(f: Poly) -> int:
    """Validate deg f = 2g+2 (g >= 1), squarefree, square leading coefficient; return g."""
    if f.is_zero or f.degree < 4 or f.degree % 2:
        raise ContinuedFractionError(f"deg f must be 2g+2 with g >= 1, got {f.degree}", error_code="bad_degree")
    f.field.require_odd_characteristic()
    if not is_squarefree(f):
        raise ContinuedFractionError("f has a repeated root", error_code="not_squarefree")
    if not f.field.is_square(f.lc):
        raise ContinuedFractionError(f"leading coefficient {f.lc} is not a square", error_code="leading_not_square")
    return f.degree // 2 - 1


def _partial_quotient(A: Poly, state: SurdState) -> Poly:
    # deg(sqrt(f) - A) < 0, so the polynomial part of (sqrt(f) + b)/c is quo(A + b, c)
    return (A + state.b) // state.c


def _advance(f: Poly, state: SurdState, a: Poly, genus: int) -> SurdState:
    b = a * state.c - state.b
    c, rem = (f - b * b).divrem(state.c)
    if not rem.is_zero or c.is_zero:
        raise ContinuedFractionError(
            "c_r does not divide f - b_{r+1}^2; surd state corrupted",
            error_code="inexact_division",
        )
    if settings.DEBUG and (b.degree > genus + 1 or c.degree > genus + 1):
        raise ContinuedFractionError(f"surd state left the reduced range: deg b={b.degree}, deg c={c.degree}")
    return SurdState(b=b, c=c)


def _close_period(f: Poly, A: Poly, state: SurdState, quotients: List[Poly], m: int, genus: int) -> int:
    """
    Continue past a strict quasi-period in blocks of m steps until c_r = 1.
    Over QQ this happens after exactly one block and only for odd m; over F_p
    the block count is bounded by the multiplicative order of c_m.
    """
    F = f.field
    rational = isinstance(F, RationalField)
    if rational and m % 2 == 0:
        raise ContinuedFractionError(f"strict quasi-period of even length {m}", error_code="bad_period")
    max_blocks = 1 if rational else F.characteristic - 1
    for block in range(1, max_blocks + 1):
        for _ in range(m):
            state = _advance(f, state, quotients[-1], genus)
            quotients.append(_partial_quotient(A, state))
        if state.c == Poly.one(F):
            return (block + 1) * m
    raise ContinuedFractionError(f"c_r != 1 after {max_blocks + 1} quasi-periods", error_code="bad_period")


def _not_periodic(g: int, quotients: List[Poly], partial: int, bound: int) -> NotPeriodicWithinBound:
    logger.info(f"No quasi-period after {len(quotients)} steps; order would exceed {bound}")
    return NotPeriodicWithinBound(genus=g, steps=len(quotients), degree_sum=partial - (g + 1), bound=bound)


def expand(f: Poly, max_order_bound: int) -> ExpansionOutcome:
    """
    Expand sqrt(f) until the first r >= 1 with deg c_r = 0 (the quasi-period m),
    or until (g+1) + sum(deg a_i) exceeds max_order_bound.

    Args:
        f: polynomial of degree 2g+2 over QQ or F_p (p odd).
        max_order_bound: largest torsion order worth looking for.

    Returns:
        A CFExpansion carrying a full period a_1..a_n, or a NotPeriodicWithinBound report.
    """
    g = _check_admissible(f)
    F = f.field
    A = sqrt_polynomial_part(f)

    state = SurdState(b=Poly.zero(F), c=Poly.one(F))
    a0 = _partial_quotient(A, state)
    state = _advance(f, state, a0, g)
    quotients: List[Poly] = []
    partial = g + 1
    # every order is at least g+1
    if partial > max_order_bound:
        return _not_periodic(g, quotients, partial, max_order_bound)
    while state.c.degree != 0:
        a = _partial_quotient(A, state)
        quotients.append(a)
        partial += a.degree
        if partial > max_order_bound:
            return _not_periodic(g, quotients, partial, max_order_bound)
        state = _advance(f, state, a, g)

    m = len(quotients) + 1
    kappa = state.c.lc
    gamma = F.inverse(kappa)
    a_m = _partial_quotient(A, state)
    quotients.append(a_m)
    n = m
    if kappa != 1:
        n = _close_period(f, A, state, quotients, m, g)
    logger.debug(f"Expansion of genus {g} curve: m={m}, n={n}, gamma={gamma}")

    try:
        return CFExpansion(genus=g, a0=a0, quotients=quotients, quasi_period=m, period=n, skew=gamma)
    except ValidationError as e:
        raise ContinuedFractionError(f"expansion violates its structure: {e}", error_code="bad_structure") from e


def torsion_order(e: ExpansionOutcome) -> int:
    """Order of D_inf: (g+1) + sum_{i=1}^{m-1} deg a_i."""
    if not isinstance(e, CFExpansion):
        raise NotPeriodicError(extra={"steps": e.steps, "degree_sum": e.degree_sum, "bound": e.bound})
    return e.order


# --- Structure of the quasi-period ---

def _proportion(p: Poly, q: Poly) -> Optional[FieldElement]:
    """The constant c with p = c*q, or None."""
    if p.is_zero or q.is_zero:
        return None
    c = p.field.div(p.lc, q.lc)
    return c if p == q.scale(c) else None


def _twist(F: Field, gamma: FieldElement, exponent: int) -> FieldElement:
    return gamma if exponent > 0 else F.inverse(gamma)


def check_skew_symmetry(e: CFExpansion) -> SkewSymmetry:
    """
    Find gamma with a_m = 2*gamma*a0 and check the inner sequence a_1..a_{m-1}
    is the gamma-twisted palindrome a_{m-i} = gamma^(+-1) a_i, the exponent
    alternating with i.
    """
    F = e.a0.field
    m = e.quasi_period
    gamma = _proportion(e.quotients[m - 1], e.a0.scale(2))
    if gamma is None:
        raise SkewSymmetryError(f"a_{m} is not a constant multiple of 2*a0")
    inner = e.quotients[: m - 1]
    ratios = []
    for i in range(1, m):
        rho = _proportion(inner[m - i - 1], inner[i - 1])
        if rho is None:
            raise SkewSymmetryError(f"a_{m - i} is not proportional to a_{i}")
        ratios.append(rho)

    if gamma == 1 and all(rho == 1 for rho in ratios):
        return SkewSymmetry(gamma=gamma, variant="palindrome")
    # "inverse": a_{m-1} = gamma^-1 a_1 (skew value 1/gamma); "direct": a_{m-1} = gamma a_1
    for variant, sign in (("inverse", -1), ("direct", 1)):
        if all(rho == _twist(F, gamma, sign * (-1) ** (i + 1)) for i, rho in enumerate(ratios, start=1)):
            logger.debug(f"Skew symmetry matched variant {variant} with gamma={gamma}")
            return SkewSymmetry(gamma=gamma, variant=variant)
    raise SkewSymmetryError(f"ratios {ratios} fit no alternating pattern for gamma={gamma}")


def period_structure(e: CFExpansion) -> PeriodStructure:
    """(m, n, strict) with strict = (gamma != 1); over QQ a strict period has odd m and n = 2m."""
    m, n = e.quasi_period, e.period
    strict = e.skew != 1
    if strict and e.a0.field == QQ and (n != 2 * m or m % 2 == 0):
        raise ContinuedFractionError(f"strict quasi-period needs odd m and n = 2m, got m={m}, n={n}")
    return PeriodStructure(m=m, n=n, strict=strict)


# --- Convergents and the Pell identity ---

def convergents(e: CFExpansion, k: int) -> Tuple[Poly, Poly]:
    """p_k / q_k = [a0; a1, ..., a_k] by the three-term recurrence."""
    if not 0 <= k <= len(e.quotients):
        raise ContinuedFractionError(f"convergent index {k} outside [0, {len(e.quotients)}]", error_code="index_out_of_range")
    F = e.a0.field
    p_prev, p = Poly.one(F), e.a0
    q_prev, q = Poly.zero(F), Poly.one(F)
    for a in e.quotients[:k]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return p, q


def pell_check(f: Poly, e: CFExpansion) -> FieldElement:
    """
    p^2 - f q^2 for (p, q) = convergents(e, m-1). It is the constant
    (-1)^m c_m and deg p equals the torsion order.
    """
    if f.field != e.a0.field:
        raise PellCertificationError("f and the expansion live over different fields")
    p, q = convergents(e, e.quasi_period - 1)
    value = p * p - f * q * q
    if value.degree != 0:
        raise PellCertificationError(f"p^2 - f q^2 = {value} is not a nonzero constant")
    if p.degree != e.order:
        raise PellCertificationError(f"deg p = {p.degree} but the expansion predicts order {e.order}")
    return value.lc
