import random
from fractions import Fraction

import pytest

from src.algebra.fields import QQ, PrimeField
from src.algebra.poly import Poly
from src.construct.families import builtin_family
from src.construct.models import HyperellipticCurve
from src.jacobian_fp.models import OddModelCurve

X = Poly.x(QQ)

# one nondegenerate specialization per built-in family
FAMILY_POINTS = {
    "Ct10": {"t": 1},
    "C13": {"u": 1, "t": 1},
    "C15": {"s": 1, "t": 1},
    "C17": {"s": 1, "t": 1},
    "C18": {"s": 1, "t": 1, "u": 1},
    "C21": {"s": 1, "t": 1, "u": 1},
}


def qpoly(*coeffs) -> Poly:
    """Ascending coefficients over QQ."""
    return Poly(coeffs, QQ)


def fpoly(p: int, *coeffs) -> Poly:
    return Poly(coeffs, PrimeField(p))


def family(label: str, **params) -> HyperellipticCurve:
    return builtin_family(label, {k: Fraction(v) for k, v in params.items()})


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def ct10():
    return family("Ct10", t=1)


@pytest.fixture(scope="session")
def c13():
    return family("C13", u=1, t=1)


@pytest.fixture(scope="session")
def genus2_f5():
    # w^2 = z^5 + 4z + 1 over F_5; F' = -1 so F is squarefree
    F = PrimeField(5)
    return OddModelCurve(field=F, F=Poly([1, 4, 0, 0, 0, 1], F), genus=2)


@pytest.fixture(scope="session")
def genus2_f3():
    F = PrimeField(3)
    return OddModelCurve(field=F, F=Poly([1, 2, 0, 0, 0, 1], F), genus=2)
