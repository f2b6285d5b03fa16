"""
Constructors for curves with D_inf torsion of prescribed order: the
diophantine solver behind quasi-period six, the (alpha, beta, gamma) family,
the partition enumeration and the quasi-period four family.
"""
import logging
import random
from fractions import Fraction
from typing import Dict, List, Tuple

from src.algebra.fields import QQ
from src.algebra.poly import Poly
from src.construct.models import ConstructionParams, HyperellipticCurve, build_curve, construction_params
from src.core.exceptions import ConstructionError, UsageError

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


def _coefficient_params(**polys: Poly) -> Dict[str, Fraction]:
    return {f"{name}_{k}": c for name, poly in polys.items() for k, c in enumerate(poly.coeffs)}


def _require_rational(*polys: Poly) -> None:
    for p in polys:
        if p.field != QQ:
            raise UsageError(f"expected a polynomial over QQ, got one over {p.field!r}", error_code="wrong_field")


def solve_diophantine(a1: Poly, r: Poly, u: Poly) -> Tuple[Poly, Poly, Poly]:
    """
    Solve -2q - 2a2 + a1 r + a3 r - 2q a1 a2 + a1 a2 a3 r - a2^2 a3 = 0 for
    (q, a2, a3) given (a1, r, u): q = u r / 2, a2 = a1 r, a3 = a1^2 u r + a1 + u.
    """
    _require_rational(a1, r, u)
    q = (u * r).scale(Fraction(1, 2))
    a2 = a1 * r
    a3 = a1 * a1 * u * r + a1 + u
    residual = -2 * q - 2 * a2 + a1 * r + a3 * r - 2 * q * a1 * a2 + a1 * a2 * a3 * r - a2 * a2 * a3
    if not residual.is_zero:
        raise ConstructionError(f"diophantine identity fails with residual {residual}", error_code="identity_failed")
    return q, a2, a3


def theorem_polynomial(a1: Poly, r: Poly, u: Poly) -> Poly:
    """f = r^2 (u (a1^2 r + 1) + a1)^2 + 4 (u a1 r^2 + r)."""
    inner = u * (a1 * a1 * r + 1) + a1
    return r * r * inner * inner + 4 * (u * a1 * r * r + r)


def theorem_curve(params: ConstructionParams) -> HyperellipticCurve:
    """Curve whose expansion has m = n = 6 and D_inf of order g+1+6a+3b+c."""
    f = theorem_polynomial(params.a1, params.r, params.u)
    alpha, beta, gamma = params.triple
    logger.debug(f"Theorem curve ({alpha},{beta},{gamma}) of genus {params.genus}, predicted order {params.predicted_order}")
    return build_curve(
        label=f"theorem({alpha},{beta},{gamma})",
        genus=params.genus,
        f=f,
        predicted_order=params.predicted_order,
        params=_coefficient_params(a1=params.a1, r=params.r, u=params.u),
        construction=params,
    )


def partitions(g: int, N: int) -> List[Triple]:
    """All (alpha, beta, gamma) with 2a + 2b + c = g+1 and g+1+6a+3b+c = N."""
    if g < 3:
        raise UsageError(f"partitions needs g >= 3, got {g}", error_code="genus_too_small")
    found: List[Triple] = []
    for alpha in range(1, (g + 1) // 2 + 1):
        for beta in range(1, (g + 1 - 2 * alpha) // 2 + 1):
            gamma = g + 1 - 2 * alpha - 2 * beta
            if gamma < 0:
                continue
            direct = g + 1 + 6 * alpha + 3 * beta + gamma == N
            closed = 2 * g + 2 + 4 * alpha + beta == N
            if direct != closed:
                raise ConstructionError(f"order formulas disagree at ({alpha}, {beta}, {gamma})", error_code="identity_failed")
            if direct:
                found.append((alpha, beta, gamma))
    return found


def achievable_orders(g: int) -> List[int]:
    """Every N for which partitions(g, N) is nonempty, ascending."""
    orders = {
        2 * g + 2 + 4 * alpha + beta
        for alpha in range(1, (g + 1) // 2 + 1)
        for beta in range(1, (g + 1 - 2 * alpha) // 2 + 1)
    }
    return sorted(orders)


def quartic_polynomial(a1: Poly, r: Poly, q: Poly) -> Poly:
    """f = (r q a1^2 - q^2 a1 + r a1 + q)^2 + 4 (r q a1 - q^2 + r)."""
    inner = r * q * a1 * a1 - q * q * a1 + r * a1 + q
    return inner * inner + 4 * (r * q * a1 - q * q + r)


def quartic_family(a1: Poly, r: Poly, q: Poly) -> HyperellipticCurve:
    """
    The quasi-period four family. Odd genus: r and q constants with q^2 != r,
    g = 2 deg a1 - 1, order 5(g+1)/2. Even genus: q constant, r linear,
    g = 2 deg a1, order 5g/2 + 2.
    """
    _require_rational(a1, r, q)
    if q.is_zero or q.degree != 0:
        raise UsageError(f"q must be a nonzero constant, got {q}", error_code="invalid_construction")
    if r.is_zero or r.degree > 1:
        raise UsageError(f"r must be a nonzero constant or linear, got {r}", error_code="invalid_construction")
    if a1.is_zero or a1.degree < 1:
        raise UsageError("a1 must be nonconstant", error_code="invalid_construction")
    if r.degree == 0:
        genus = 2 * a1.degree - 1
        if q * q == r:
            raise ConstructionError("q^2 = r makes the odd-genus family degenerate", error_code="q_squared_equals_r")
        predicted = 5 * (genus + 1) // 2
    else:
        genus = 2 * a1.degree
        predicted = 5 * genus // 2 + 2
    if genus < 3:
        raise UsageError(f"quartic family needs genus >= 3, got {genus}", error_code="genus_too_small")
    f = quartic_polynomial(a1, r, q)
    return build_curve(
        label="quartic",
        genus=genus,
        f=f,
        predicted_order=predicted,
        params=_coefficient_params(a1=a1, r=r, q=q),
    )


def random_poly(degree: int, rng: random.Random, bound: int = 3) -> Poly:
    """Integer coefficients in [-bound, bound] with a nonzero leading one."""
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    return Poly(coeffs + [lead], QQ)


def random_params(g: int, triple: Triple, rng: random.Random, bound: int = 3) -> ConstructionParams:
    """Small-coefficient a1, r, u of the exact degrees the triple asks for."""
    alpha, beta, gamma = triple
    return construction_params(
        alpha,
        beta,
        gamma,
        a1=random_poly(alpha, rng, bound),
        r=random_poly(beta, rng, bound),
        u=random_poly(gamma, rng, bound),
        genus=g,
    )
