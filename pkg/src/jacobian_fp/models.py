"""
Data models for divisor-class arithmetic on odd-degree models over F_p.
"""
from dataclasses import dataclass
from typing import List, Optional

from pydantic import BaseModel

from src.algebra.fields import PrimeField
from src.algebra.poly import Poly


@dataclass(frozen=True)
class OddModelCurve:
    """w^2 = F(z) over F_p with deg F = 2g+1 and F squarefree."""

    field: PrimeField
    F: Poly
    genus: int
    root: int = 0

    @property
    def p(self) -> int:
        return self.field.p


@dataclass(frozen=True)
class MumfordDivisor:
    """Reduced pair (u, v): u monic, deg v < deg u <= g, u | v^2 - F."""

    u: Poly
    v: Poly

    @property
    def is_identity(self) -> bool:
        return self.u.degree == 0

    def __str__(self) -> str:
        return f"({self.u}, {self.v})"


class PrimeCheck(BaseModel):
    p: int
    root: int
    passed: bool
    failed_multiple: Optional[int] = None


class OrderCertificate(BaseModel):
    """N*D = 0 and (N/l)*D != 0 for every prime l | N, at each listed prime."""

    label: str
    order: int
    primes: List[PrimeCheck]
    passed: bool
