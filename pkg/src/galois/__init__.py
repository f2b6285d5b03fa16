"""Galois-group certificates from Frobenius cycle types."""
from .certify import certify_symmetric, cycle_type, recheck_witnesses, simplicity_report
from .factor import distinct_degree_factorization, equal_degree_factorization, factor_degrees, factor_squarefree
from .models import CycleTypeSample, GaloisCertificate, SimplicityReport

__all__ = [
    "certify_symmetric",
    "cycle_type",
    "recheck_witnesses",
    "simplicity_report",
    "distinct_degree_factorization",
    "equal_degree_factorization",
    "factor_degrees",
    "factor_squarefree",
    "CycleTypeSample",
    "GaloisCertificate",
    "SimplicityReport",
]
