"""
Independent order oracle: reduce a curve mod p, move a rational root to
infinity to get an odd-degree model, and check N*(D+ - D-) by Cantor's
algorithm at several primes of good reduction.
"""
import logging
from typing import List, Optional, Tuple

from sympy import primefactors, primerange

from src.algebra.fields import PrimeField
from src.algebra.operations import is_squarefree
from src.algebra.poly import Poly
from src.construct.models import HyperellipticCurve
from src.core.config import settings
from src.core.exceptions import AlgebraError, BadReductionError, NoRationalRootError, PrimeSearchError, UsageError
from src.jacobian_fp.cantor import cantor_add, negate, scalar_mul
from src.jacobian_fp.models import MumfordDivisor, OddModelCurve, OrderCertificate, PrimeCheck

logger = logging.getLogger(__name__)


def reduce_curve(C: HyperellipticCurve, p: int) -> Poly:
    """f mod p, accepted only when degree, squarefreeness and a square leading coefficient survive."""
    if p == 2:
        raise BadReductionError("characteristic 2 is excluded", error_code="characteristic_two", extra={"p": p})
    try:
        fbar = C.f.reduce_mod(p)
    except AlgebraError as e:
        raise BadReductionError(f"bad reduction at {p}: {e.detail}", error_code=e.error_code, extra={"p": p}) from e
    if fbar.degree != 2 * C.genus + 2:
        raise BadReductionError(f"bad reduction at {p}: degree drops to {fbar.degree}", extra={"p": p})
    if not is_squarefree(fbar):
        raise BadReductionError(f"bad reduction at {p}: f mod {p} has a repeated root", extra={"p": p})
    if not fbar.field.is_square(fbar.lc):
        raise BadReductionError(f"bad reduction at {p}: leading coefficient is not a square", extra={"p": p})
    return fbar


def _smallest_root(fbar: Poly) -> int:
    for x0 in range(fbar.field.p):
        if fbar(x0) == 0:
            return x0
    raise NoRationalRootError(f"f has no root in F_{fbar.field.p}", extra={"p": fbar.field.p})


def to_odd_model(fbar: Poly) -> Tuple[OddModelCurve, MumfordDivisor, MumfordDivisor]:
    """
    Substitute x = x0 + 1/z, y = w / z^(g+1) at the smallest root x0:
    F(z) = z^(2g+2) fbar(x0 + 1/z), whose coefficients are those of
    fbar(x + x0) reversed. The two points at infinity land on (0, +-h) with
    h^2 = lc(fbar).

    Returns:
        (odd model carrying x0, D+, D-)
    """
    F = fbar.field
    if not isinstance(F, PrimeField):
        raise UsageError("to_odd_model works over F_p", error_code="wrong_field")
    F.require_odd_characteristic()
    if fbar.degree < 4 or fbar.degree % 2:
        raise UsageError(f"expected even degree 2g+2 >= 4, got {fbar.degree}", error_code="bad_degree")
    if not is_squarefree(fbar):
        raise BadReductionError("repeated root", extra={"p": F.p})
    if not F.is_square(fbar.lc):
        raise BadReductionError("leading coefficient is not a square", extra={"p": F.p})
    genus = fbar.degree // 2 - 1
    x0 = _smallest_root(fbar)
    shifted = fbar.shift(x0)
    reversed_coeffs = [shifted[k] for k in range(fbar.degree, -1, -1)]
    odd = Poly(reversed_coeffs, F)
    if odd.degree != 2 * genus + 1:
        raise BadReductionError(f"odd model has degree {odd.degree}, expected {2 * genus + 1}", extra={"p": F.p})
    h = F.sqrt(fbar.lc)
    z = Poly.x(F)
    curve = OddModelCurve(field=F, F=odd, genus=genus, root=x0)
    d_plus = MumfordDivisor(u=z, v=Poly.constant(h, F))
    d_minus = MumfordDivisor(u=z, v=Poly.constant(F.reduce(-h), F))
    return curve, d_plus, d_minus


def _check_order(curve: OddModelCurve, D: MumfordDivisor, N: int) -> Tuple[bool, int]:
    """(passed, failing multiple or 0)."""
    if not scalar_mul(curve, N, D).is_identity:
        return False, N
    for ell in primefactors(N):
        if scalar_mul(curve, N // ell, D).is_identity:
            return False, N // ell
    return True, 0


def certify_order(C: HyperellipticCurve, N: int, prime_count: int, search_bound: Optional[int] = None) -> OrderCertificate:
    """
    Check that D_inf = D+ - D- has exact order N at the first `prime_count`
    odd primes of good reduction where f has a root.
    """
    if N < 2:
        raise UsageError(f"order must be at least 2, got {N}", error_code="bad_order")
    if prime_count < 1:
        raise UsageError(f"need at least one prime, got {prime_count}", error_code="bad_prime_count")
    bound = search_bound or settings.PRIME_SEARCH_BOUND
    checks: List[PrimeCheck] = []
    for p in primerange(3, bound + 1):
        try:
            fbar = reduce_curve(C, int(p))
            curve, d_plus, d_minus = to_odd_model(fbar)
        except BadReductionError as e:
            logger.debug(f"Skipping p={p}: {e.detail}")
            continue
        # D+ - D- = D+ + D+ since -D- = D+
        D = cantor_add(curve, d_plus, negate(curve, d_minus))
        passed, multiple = _check_order(curve, D, N)
        logger.info(f"{C.label}: p={p} root={curve.root} N={N} {'passed' if passed else 'failed'}")
        checks.append(PrimeCheck(p=int(p), root=curve.root, passed=passed, failed_multiple=multiple or None))
        if len(checks) == prime_count:
            break
    if len(checks) < prime_count:
        raise PrimeSearchError(f"only {len(checks)} admissible primes below {bound}, needed {prime_count}")
    return OrderCertificate(label=C.label, order=N, primes=checks, passed=all(c.passed for c in checks))
