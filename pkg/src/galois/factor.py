"""
Factorization over F_p: distinct-degree splitting followed by equal-degree
splitting (Cantor-Zassenhaus, trace map in characteristic 2).
"""
import logging
import random
from typing import List, Optional, Tuple

from src.algebra.fields import PrimeField
from src.algebra.operations import is_squarefree
from src.algebra.poly import Poly
from src.core.config import settings
from src.core.exceptions import AlgebraError

logger = logging.getLogger(__name__)


def _require_prime_field(f: Poly) -> PrimeField:
    if not isinstance(f.field, PrimeField):
        raise AlgebraError(f"factorization needs a prime field, got {f.field!r}", error_code="wrong_field")
    return f.field


def distinct_degree_factorization(f: Poly) -> List[Tuple[Poly, int]]:
    """
    Split a squarefree f into (g_d, d) where g_d is the product of all monic
    irreducible factors of degree d.
    """
    F = _require_prime_field(f)
    f = f.monic()
    x = Poly.x(F)
    h = x
    d = 0
    out: List[Tuple[Poly, int]] = []
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(F.p, f)
        g = f.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f.exquo(g)
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _random_poly(F: PrimeField, below: int, rng: random.Random) -> Poly:
    return Poly([rng.randrange(F.p) for _ in range(below)], F)


def _splitting_candidate(a: Poly, g: Poly, d: int) -> Poly:
    F = g.field
    if F.p == 2:
        acc, term = a, a
        for _ in range(d - 1):
            term = (term * term) % g
            acc = acc + term
        return acc
    return a.pow_mod((F.p ** d - 1) // 2, g) - 1


def equal_degree_factorization(g: Poly, d: int, rng: random.Random) -> List[Poly]:
    """Monic irreducible factors of g, all of which have degree d."""
    if g.degree == d:
        return [g.monic()]
    while True:
        a = _random_poly(g.field, g.degree, rng)
        if a.degree < 1:
            continue
        h = g.gcd(_splitting_candidate(a, g, d))
        if 0 < h.degree < g.degree:
            logger.debug(f"Split degree {g.degree} block into {h.degree} + {g.degree - h.degree} over F_{g.field.p}")
            return equal_degree_factorization(h, d, rng) + equal_degree_factorization(g.exquo(h), d, rng)


def factor_squarefree(f: Poly, rng: Optional[random.Random] = None) -> List[Poly]:
    """Monic irreducible factors of a squarefree f, sorted by degree then coefficients."""
    _require_prime_field(f)
    if f.is_zero or f.degree < 1:
        return []
    if not is_squarefree(f):
        raise AlgebraError(f"{f} is not squarefree", error_code="not_squarefree")
    rng = rng or random.Random(settings.FACTOR_SEED)
    factors: List[Poly] = []
    for g, d in distinct_degree_factorization(f):
        factors.extend(equal_degree_factorization(g, d, rng))
    return sorted(factors, key=lambda q: (q.degree, q.coeffs))


def factor_degrees(f: Poly) -> List[int]:
    """Degrees of the irreducible factors of a squarefree f, descending."""
    degrees: List[int] = []
    for g, d in distinct_degree_factorization(f):
        degrees.extend([d] * (g.degree // d))
    return sorted(degrees, reverse=True)
