import itertools
from fractions import Fraction

import pytest

from conftest import FAMILY_POINTS, family, fpoly
from src.algebra.fields import PrimeField
from src.algebra.operations import is_squarefree
from src.algebra.poly import Poly
from src.construct.models import build_curve
from src.core.exceptions import AlgebraError, BadReductionError, NoRationalRootError, PrimeSearchError, UsageError
from src.jacobian_fp import (
    MumfordDivisor,
    cantor_add,
    certify_order,
    divisor_order,
    enumerate_jacobian,
    identity,
    is_valid,
    negate,
    reduce_curve,
    scalar_mul,
    to_odd_model,
)


class TestReduceCurve:
    def test_bad_prime_for_ct10(self, ct10):
        with pytest.raises(BadReductionError) as e:
            reduce_curve(ct10, 5)
        assert e.value.extra["p"] == 5

    def test_characteristic_two(self, ct10):
        with pytest.raises(BadReductionError) as e:
            reduce_curve(ct10, 2)
        assert e.value.error_code == "characteristic_two"

    @pytest.mark.parametrize("p", [3, 7, 11, 13])
    def test_accepted_iff_squarefree(self, ct10, p):
        fbar = ct10.f.reduce_mod(p)
        accepted = fbar.degree == ct10.f.degree and is_squarefree(fbar) and fbar.field.is_square(fbar.lc)
        try:
            reduce_curve(ct10, p)
        except BadReductionError:
            assert not accepted
        else:
            assert accepted

    def test_denominator_divisible(self):
        x = Poly.x()
        half = build_curve("thirds", 1, x ** 4 + x.scale(Fraction(1, 3)) + 1)
        with pytest.raises(BadReductionError) as e:
            reduce_curve(half, 3)
        assert e.value.error_code == "denominator_divisible"


class TestOddModel:
    def test_root_at_zero(self):
        curve, d_plus, d_minus = to_odd_model(fpoly(7, 0, 1, 0, 0, 0, 0, 1))
        assert curve.root == 0
        assert curve.F == fpoly(7, 1, 0, 0, 0, 0, 1)
        assert d_plus == MumfordDivisor(u=fpoly(7, 0, 1), v=fpoly(7, 1))
        assert d_minus == MumfordDivisor(u=fpoly(7, 0, 1), v=fpoly(7, 6))

    def test_no_root(self):
        with pytest.raises(NoRationalRootError):
            to_odd_model(fpoly(5, 1, 0, 0, 0, 1))

    def test_smallest_root_is_used(self):
        # roots 2 and 3 over F_7
        fbar = fpoly(7, -2, 1) * fpoly(7, -3, 1) * fpoly(7, 1, 0, 1)
        curve, _, _ = to_odd_model(fbar)
        assert curve.root == 2

    def test_degree_and_divisors_on_random_input(self, rng):
        done = 0
        while done < 100:
            p = rng.choice([7, 11, 13, 17])
            g = rng.randint(1, 3)
            F = PrimeField(p)
            x0 = rng.randrange(p)
            lead = rng.randrange(1, p) ** 2
            tail = Poly([rng.randrange(p) for _ in range(2 * g + 1)] + [lead], F)
            fbar = (Poly.x(F) - x0) * tail
            if not is_squarefree(fbar):
                continue
            curve, d_plus, d_minus = to_odd_model(fbar)
            assert curve.F.degree == 2 * g + 1
            assert curve.genus == g
            assert fbar(curve.root) == 0 and curve.root <= x0
            assert is_valid(curve, d_plus) and is_valid(curve, d_minus)
            done += 1

    def test_rejects_rational_input(self, ct10):
        with pytest.raises(UsageError):
            to_odd_model(ct10.f)


class TestGroupLaw:
    @pytest.fixture(params=["genus2_f3", "genus2_f5"])
    def jacobian(self, request):
        curve = request.getfixturevalue(request.param)
        return curve, enumerate_jacobian(curve)

    def test_enumerated_classes_are_valid(self, jacobian):
        curve, classes = jacobian
        assert len(set(classes)) == len(classes)
        assert all(is_valid(curve, D) for D in classes)

    def test_identity_and_inverse(self, jacobian):
        curve, classes = jacobian
        zero = identity(curve)
        for D in classes:
            assert cantor_add(curve, D, zero) == D
            assert cantor_add(curve, zero, D) == D
            assert cantor_add(curve, D, negate(curve, D)).is_identity

    def test_closed_and_commutative(self, jacobian):
        curve, classes = jacobian
        members = set(classes)
        for D1, D2 in itertools.combinations_with_replacement(classes, 2):
            s = cantor_add(curve, D1, D2)
            assert s in members
            assert s == cantor_add(curve, D2, D1)

    def test_associative_f3(self, genus2_f3):
        classes = enumerate_jacobian(genus2_f3)
        for D1, D2, D3 in itertools.product(classes, repeat=3):
            left = cantor_add(genus2_f3, cantor_add(genus2_f3, D1, D2), D3)
            right = cantor_add(genus2_f3, D1, cantor_add(genus2_f3, D2, D3))
            assert left == right

    @pytest.mark.slow
    def test_associative_f5(self, genus2_f5):
        classes = enumerate_jacobian(genus2_f5)
        for D1, D2, D3 in itertools.product(classes, repeat=3):
            left = cantor_add(genus2_f5, cantor_add(genus2_f5, D1, D2), D3)
            right = cantor_add(genus2_f5, D1, cantor_add(genus2_f5, D2, D3))
            assert left == right

    def test_lagrange(self, jacobian):
        curve, classes = jacobian
        n = len(classes)
        for D in classes:
            assert n % divisor_order(curve, D, n) == 0
            assert scalar_mul(curve, n, D).is_identity


class TestScalarMul:
    def test_zero_multiple(self, genus2_f5):
        D = enumerate_jacobian(genus2_f5)[1]
        assert scalar_mul(genus2_f5, 0, D) == identity(genus2_f5)

    def test_matches_repeated_addition(self, genus2_f5):
        for D in enumerate_jacobian(genus2_f5)[:8]:
            acc = identity(genus2_f5)
            for n in range(21):
                assert scalar_mul(genus2_f5, n, D) == acc
                acc = cantor_add(genus2_f5, acc, D)

    def test_doubling(self, genus2_f3, rng):
        classes = enumerate_jacobian(genus2_f3)
        for D in rng.choices(classes, k=200):
            assert scalar_mul(genus2_f3, 2, D) == cantor_add(genus2_f3, D, D)

    def test_negative_scalar(self, genus2_f3):
        with pytest.raises(AlgebraError):
            scalar_mul(genus2_f3, -1, identity(genus2_f3))

    def test_order_bound_exceeded(self, genus2_f5):
        classes = enumerate_jacobian(genus2_f5)
        D = max(classes, key=lambda c: divisor_order(genus2_f5, c, len(classes)))
        with pytest.raises(AlgebraError):
            divisor_order(genus2_f5, D, 1)


class TestCertifyOrder:
    @pytest.mark.parametrize("label", sorted(FAMILY_POINTS))
    def test_families(self, label):
        curve = family(label, **FAMILY_POINTS[label])
        cert = certify_order(curve, curve.predicted_order, 3)
        assert cert.passed
        assert len(cert.primes) == 3
        assert [c.p for c in cert.primes] == sorted(c.p for c in cert.primes)
        assert all(c.p != 2 for c in cert.primes)

    def test_ct10_skips_bad_primes(self, ct10):
        cert = certify_order(ct10, 10, 3)
        assert 5 not in [c.p for c in cert.primes]

    def test_wrong_order_fails(self, c13):
        cert = certify_order(c13, 14, 1)
        assert not cert.passed
        assert cert.primes[0].failed_multiple == 14

    def test_multiple_of_the_order_fails(self, c13):
        cert = certify_order(c13, 26, 1)
        assert not cert.passed
        assert cert.primes[0].failed_multiple == 13

    def test_prime_search_exhausted(self, c13):
        with pytest.raises(PrimeSearchError):
            certify_order(c13, 13, 50, search_bound=20)

    @pytest.mark.parametrize("order, primes", [(1, 3), (13, 0)])
    def test_bad_arguments(self, c13, order, primes):
        with pytest.raises(UsageError):
            certify_order(c13, order, primes)
