"""
Data models for continued-fraction expansions of sqrt(f) in k(x).
"""
from dataclasses import dataclass
from typing import List, Literal, NamedTuple, Union

from pydantic import BaseModel, ConfigDict, computed_field, model_validator

from src.algebra.fields import QQ
from src.algebra.poly import Poly
from src.algebra.serialization import JsonFieldElement, JsonPoly


@dataclass(frozen=True)
class SurdState:
    """alpha_r = (sqrt(f) + b) / c, with c dividing f - b^2."""

    b: Poly
    c: Poly


class CFExpansion(BaseModel):
    """A periodic expansion [a0; a1, ..., a_n] with quasi-period m and skew value."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    periodic: Literal[True] = True
    genus: int
    a0: JsonPoly
    quotients: List[JsonPoly]
    quasi_period: int
    period: int
    skew: JsonFieldElement

    @model_validator(mode="after")
    def _check_structure(self) -> "CFExpansion":
        g, m, n = self.genus, self.quasi_period, self.period
        if self.a0.degree != g + 1:
            raise ValueError(f"deg a0 = {self.a0.degree}, expected g+1 = {g + 1}")
        if m < 1 or len(self.quotients) < m:
            raise ValueError(f"quasi-period {m} needs at least {m} stored quotients")
        for i, a in enumerate(self.quotients[: m - 1], start=1):
            if not 1 <= a.degree <= g:
                raise ValueError(f"deg a_{i} = {a.degree} outside [1, {g}]")
        if self.skew == 0:
            raise ValueError("skew value must be nonzero")
        if self.skew == 1 and n != m:
            raise ValueError(f"skew 1 requires period = quasi-period, got n={n}, m={m}")
        if self.skew != 1:
            if n <= m or n % m:
                raise ValueError(f"strict quasi-period needs n a proper multiple of m, got n={n}, m={m}")
            if self.a0.field == QQ and (n != 2 * m or m % 2 == 0):
                raise ValueError(f"strict quasi-period over QQ needs odd m and n = 2m, got n={n}, m={m}")
        if len(self.quotients) < n:
            raise ValueError(f"period {n} needs {n} stored quotients, got {len(self.quotients)}")
        return self

    @computed_field
    @property
    def order(self) -> int:
        """(g+1) + sum of deg a_i over 1 <= i <= m-1."""
        return self.genus + 1 + sum(a.degree for a in self.quotients[: self.quasi_period - 1])


class NotPeriodicWithinBound(BaseModel):
    """No quasi-period was found before the order bound was exceeded."""

    periodic: Literal[False] = False
    genus: int
    steps: int
    degree_sum: int
    bound: int


ExpansionOutcome = Union[CFExpansion, NotPeriodicWithinBound]


class SkewSymmetry(BaseModel):
    """Skew value gamma (a_m = 2*gamma*a0) and which exponent orientation matched."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    gamma: JsonFieldElement
    variant: Literal["palindrome", "inverse", "direct"]


class PeriodStructure(NamedTuple):
    m: int
    n: int
    strict: bool
