"""
Cantor's algorithm on w^2 = F(z), deg F odd: composition, reduction,
negation, scalar multiples and brute-force enumeration of small Jacobians.
"""
import itertools
import logging
from typing import Iterator, List

from src.algebra.poly import Poly
from src.core.exceptions import AlgebraError
from src.jacobian_fp.models import MumfordDivisor, OddModelCurve

logger = logging.getLogger(__name__)


def identity(C: OddModelCurve) -> MumfordDivisor:
    return MumfordDivisor(u=Poly.one(C.field), v=Poly.zero(C.field))


def is_valid(C: OddModelCurve, D: MumfordDivisor) -> bool:
    u, v = D.u, D.v
    if u.is_zero or u.lc != 1 or u.degree > C.genus:
        return False
    if not v.is_zero and v.degree >= u.degree:
        return False
    return ((v * v - C.F) % u).is_zero


def negate(C: OddModelCurve, D: MumfordDivisor) -> MumfordDivisor:
    return MumfordDivisor(u=D.u, v=(-D.v) % D.u)


def _reduce(C: OddModelCurve, u: Poly, v: Poly) -> MumfordDivisor:
    while u.degree > C.genus:
        u = (C.F - v * v).exquo(u).monic()
        v = (-v) % u
    u = u.monic()
    return MumfordDivisor(u=u, v=v % u)


def cantor_add(C: OddModelCurve, D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
    """Reduced representative of D1 + D2."""
    u1, v1, u2, v2 = D1.u, D1.v, D2.u, D2.v
    d1, e1, e2 = u1.xgcd(u2)
    d, c1, c2 = d1.xgcd(v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u = (u1 * u2).exquo(d * d)
    v = (s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + C.F)).exquo(d) % u
    return _reduce(C, u, v)


def scalar_mul(C: OddModelCurve, n: int, D: MumfordDivisor) -> MumfordDivisor:
    """n*D by double-and-add, most significant bit first."""
    if n < 0:
        raise AlgebraError(f"scalar must be nonnegative, got {n}", error_code="negative_scalar")
    result = identity(C)
    for bit in bin(n)[2:]:
        result = cantor_add(C, result, result)
        if bit == "1":
            result = cantor_add(C, result, D)
    return result


def _polys(C: OddModelCurve, degree: int, monic: bool) -> Iterator[Poly]:
    p = C.p
    if monic:
        for low in itertools.product(range(p), repeat=degree):
            yield Poly(list(low) + [1], C.field)
    else:
        for coeffs in itertools.product(range(p), repeat=degree):
            yield Poly(list(coeffs), C.field)


def enumerate_jacobian(C: OddModelCurve) -> List[MumfordDivisor]:
    """Every reduced divisor class; only feasible for tiny p^g."""
    classes = [identity(C)]
    for d in range(1, C.genus + 1):
        for u in _polys(C, d, monic=True):
            for v in _polys(C, d, monic=False):
                if ((v * v - C.F) % u).is_zero:
                    classes.append(MumfordDivisor(u=u, v=v))
    logger.debug(f"|J(F_{C.p})| = {len(classes)} for F = {C.F}")
    return classes


def divisor_order(C: OddModelCurve, D: MumfordDivisor, bound: int) -> int:
    """Smallest n >= 1 with n*D = 0, by repeated addition up to `bound`."""
    acc = D
    for n in range(1, bound + 1):
        if acc.is_identity:
            return n
        acc = cantor_add(C, acc, D)
    raise AlgebraError(f"order of {D} exceeds {bound}", error_code="order_bound_exceeded")
