"""
Data models for Frobenius cycle-type samples and Galois certificates.
"""
from typing import List, Literal

from pydantic import BaseModel, ConfigDict

from src.algebra.serialization import JsonPoly

Verdict = Literal["S_n", "A_n", "inconclusive"]


class CycleTypeSample(BaseModel):
    """Degrees of the irreducible factors of f mod p, descending."""

    model_config = ConfigDict(frozen=True)

    p: int
    type: List[int]


class GaloisCertificate(BaseModel):
    verdict: Verdict
    n: int
    witnesses: List[CycleTypeSample]
    disc_square: bool
    primes_scanned: int = 0


class SimplicityReport(BaseModel):
    """Galois verdict for the degree 2g+1 cofactor f / r of a beta = 1 curve."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    label: str
    cofactor: JsonPoly
    certificate: GaloisCertificate
    absolutely_simple: bool
