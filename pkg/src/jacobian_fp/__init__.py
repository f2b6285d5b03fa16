"""Divisor-class arithmetic over F_p as an independent torsion-order oracle."""
from .cantor import cantor_add, divisor_order, enumerate_jacobian, identity, is_valid, negate, scalar_mul
from .models import MumfordDivisor, OddModelCurve, OrderCertificate, PrimeCheck
from .oracle import certify_order, reduce_curve, to_odd_model

__all__ = [
    "cantor_add",
    "divisor_order",
    "enumerate_jacobian",
    "identity",
    "is_valid",
    "negate",
    "scalar_mul",
    "MumfordDivisor",
    "OddModelCurve",
    "OrderCertificate",
    "PrimeCheck",
    "certify_order",
    "reduce_curve",
    "to_odd_model",
]
