"""
Polynomial operations the curve machinery is built on: division, resultant,
discriminant, squarefreeness and the polynomial part of a square root.
"""
import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Tuple

from src.algebra.fields import FieldElement, RationalField
from src.algebra.poly import Poly
from src.core.exceptions import AlgebraError

logger = logging.getLogger(__name__)


def divrem(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """Euclidean quotient and remainder, a = q*b + r with deg r < deg b."""
    return a.divrem(b)


def _same_field(a: Poly, b: Poly) -> None:
    if a.field != b.field:
        raise AlgebraError(f"Field mismatch: {a.field!r} vs {b.field!r}", error_code="field_mismatch")


def _clear_denominators(f: Poly) -> Tuple[Poly, int]:
    """Return (F, d) with F integral and f = F / d."""
    d = lcm(*(c.denominator for c in f.coeffs)) if f.coeffs else 1
    return f.scale(d), d


def _integer_content(f: Poly) -> Fraction:
    return Fraction(gcd(*(int(c) for c in f.coeffs)))


def _pseudo_remainder(a: Poly, b: Poly) -> Poly:
    delta = a.degree - b.degree
    return a.scale(b.lc ** (delta + 1)) % b


def _subresultant(a: Poly, b: Poly, primitive: bool) -> FieldElement:
    # Collins' subresultant PRS; `primitive` strips integer content first.
    F = a.field
    if primitive:
        ca, cb = _integer_content(a), _integer_content(b)
        a, b = a.scale(1 / ca), b.scale(1 / cb)
    else:
        ca = cb = F.one
    t = F.reduce(ca ** b.degree * cb ** a.degree)
    g = h = F.one
    s = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 and b.degree % 2:
            s = -1
    while b.degree > 0:
        delta = a.degree - b.degree
        if a.degree % 2 and b.degree % 2:
            s = -s
        r = _pseudo_remainder(a, b)
        a, b = b, r.scale(F.inverse(F.reduce(g * h ** delta)))
        g = a.lc
        if delta > 0:
            h = F.reduce(g ** delta * F.inverse(h) ** (delta - 1))
        if b.is_zero:
            return F.zero
    h = F.reduce(b.lc ** a.degree * F.inverse(h) ** (a.degree - 1))
    return F.reduce(s * t * h)


def resultant(a: Poly, b: Poly) -> FieldElement:
    """Res(a, b) via subresultants; over QQ on cleared, primitive integer images."""
    _same_field(a, b)
    F = a.field
    if a.is_zero or b.is_zero:
        return F.zero
    if a.degree == 0:
        return F.reduce(a.lc ** b.degree)
    if b.degree == 0:
        return F.reduce(b.lc ** a.degree)
    if isinstance(F, RationalField):
        A, da = _clear_denominators(a)
        B, db = _clear_denominators(b)
        res = _subresultant(A, B, primitive=True)
        return res / (Fraction(da) ** b.degree * Fraction(db) ** a.degree)
    return _subresultant(a, b, primitive=False)


def discriminant(f: Poly) -> FieldElement:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f), n = deg f."""
    if f.is_zero or f.degree < 1:
        raise AlgebraError("Discriminant of a constant polynomial", error_code="constant_polynomial")
    F = f.field
    n = f.degree
    df = f.derivative()
    if df.is_zero:
        return F.zero
    # the derivative may drop degree in characteristic p; restore the formal degree n-1
    res = F.reduce(resultant(f, df) * f.lc ** (n - 1 - df.degree))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return F.reduce(sign * res * F.inverse(f.lc))


def is_squarefree(f: Poly) -> bool:
    """True iff gcd(f, f') is a nonzero constant."""
    if f.is_zero:
        raise AlgebraError("The zero polynomial has no squarefree decomposition", error_code="zero_polynomial")
    if f.degree == 0:
        return True
    return f.gcd(f.derivative()).degree == 0


def sqrt_polynomial_part(f: Poly) -> Poly:
    """
    The polynomial part A of sqrt(f) for deg f = 2d: deg A = d, lc(A)^2 = lc(f)
    and deg(f - A^2) <= d - 1. Solved coefficient by coefficient from the top.

    The leading coefficient is the positive root over QQ and the least
    residue over F_p.
    """
    if f.is_zero or f.degree % 2:
        raise AlgebraError(f"sqrt_polynomial_part needs even degree, got {f.degree}", error_code="odd_degree")
    F = f.field
    F.require_odd_characteristic()
    d = f.degree // 2
    lead = F.sqrt(f.lc)
    inv_two_lead = F.inverse(F.reduce(2 * lead))
    A = [F.zero] * (d + 1)
    A[d] = lead
    for k in range(d - 1, -1, -1):
        s = F.zero
        for i in range(k + 1, d):
            s += A[i] * A[d + k - i]
        A[k] = F.reduce((f[d + k] - s) * inv_two_lead)
    return Poly(A, F)
