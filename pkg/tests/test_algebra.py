import pickle
from fractions import Fraction

import pytest
import sympy

from conftest import X, fpoly, qpoly
from src.algebra import (
    NEG_INF,
    QQ,
    PrimeField,
    discriminant,
    divrem,
    is_squarefree,
    parse_rational,
    resultant,
    sqrt_polynomial_part,
)
from src.algebra.poly import Poly
from src.cli.poly_parser import parse_poly
from src.core.exceptions import AlgebraError, NotASquareError

SX = sympy.Symbol("x")


def to_sympy(f: Poly) -> sympy.Expr:
    return sum(sympy.Rational(c.numerator, c.denominator) * SX ** k for k, c in enumerate(f.coeffs))


def as_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def sylvester_resultant(a: Poly, b: Poly) -> Fraction:
    """Res(a, b) as the determinant of the Sylvester matrix."""
    m, n = a.degree, b.degree
    top, bottom = list(reversed(a.coeffs)), list(reversed(b.coeffs))
    rows = [[0] * i + top + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + bottom + [0] * (m - 1 - i) for i in range(m)]
    exact = [[sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in row] for row in rows]
    return as_fraction(sympy.Matrix(exact).det())


def random_qpoly(rng, degree, bound=6):
    coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, 4)) for _ in range(degree)]
    return Poly(coeffs + [Fraction(rng.choice([-3, -2, -1, 1, 2, 5]), rng.randint(1, 3))], QQ)


class TestFields:
    def test_parse_rational(self):
        assert parse_rational("3/4") == Fraction(3, 4)
        assert parse_rational(" -7 ") == Fraction(-7)
        with pytest.raises(AlgebraError):
            parse_rational("0.5")
        with pytest.raises(AlgebraError):
            parse_rational("1e3")

    @pytest.mark.parametrize("text", ["1/0", " -3 / 0 "])
    def test_parse_rational_zero_denominator(self, text):
        with pytest.raises(AlgebraError) as e:
            parse_rational(text)
        assert e.value.error_code == "bad_rational"
        with pytest.raises(AlgebraError):
            QQ.convert(text)

    def test_rational_field_refuses_floats(self):
        with pytest.raises(AlgebraError):
            QQ.convert(0.5)

    def test_rational_sqrt(self):
        assert QQ.sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert QQ.is_square(Fraction(0))
        assert not QQ.is_square(Fraction(-4))
        with pytest.raises(NotASquareError):
            QQ.sqrt(Fraction(2))

    def test_prime_field_conversion(self):
        F = PrimeField(7)
        assert F.convert(Fraction(1, 2)) == 4
        assert F.convert(-1) == 6
        with pytest.raises(AlgebraError) as e:
            F.convert(Fraction(1, 14))
        assert e.value.error_code == "denominator_divisible"

    def test_prime_field_rejects_composite(self):
        with pytest.raises(AlgebraError):
            PrimeField(9)

    def test_prime_field_least_square_root(self):
        F = PrimeField(13)
        assert F.sqrt(4) == 2
        assert F.sqrt(10) == 6  # 6^2 = 36 = 10, 7^2 = 49 = 10
        assert not F.is_square(2)

    def test_characteristic_two_is_refused_where_it_matters(self):
        with pytest.raises(AlgebraError):
            sqrt_polynomial_part(fpoly(2, 1, 0, 1))


class TestPoly:
    def test_zero_polynomial_degree(self):
        zero = Poly.zero(QQ)
        assert zero.degree is NEG_INF
        assert zero.degree < 0
        assert not zero.degree > -100
        with pytest.raises(TypeError):
            zero.degree + 1

    def test_arithmetic_mixes_with_scalars(self):
        f = 2 * X ** 2 - X + Fraction(1, 2)
        assert f.coeffs == (Fraction(1, 2), Fraction(-1), Fraction(2))
        assert (1 + X) * (1 - X) == qpoly(1, 0, -1)

    def test_immutable_and_picklable(self):
        f = qpoly(1, 2, 3)
        with pytest.raises(AttributeError):
            f.coeffs = ()
        assert pickle.loads(pickle.dumps(f)) == f

    def test_str_round_trips_through_parser(self):
        f = qpoly(Fraction(1, 8), Fraction(-1, 4), 1, 2)
        assert str(f) == "2*x^3 + x^2 - 1/4*x + 1/8"
        assert parse_poly(str(f)) == f

    def test_shift_and_compose(self):
        f = X ** 2
        assert f.shift(1) == qpoly(1, 2, 1)
        assert f(X + 1) == f.shift(1)
        assert f(3) == 9

    def test_xgcd_bezout(self):
        a = (X - 1) * (X + 2) * (X ** 2 + 1)
        b = (X + 2) * (X ** 3 - 5)
        d, s, t = a.xgcd(b)
        assert d == X + 2
        assert s * a + t * b == d

    def test_pow_mod(self):
        F = PrimeField(5)
        x = Poly.x(F)
        m = fpoly(5, 2, 0, 1)
        assert x.pow_mod(5, m) == (x ** 5) % m

    def test_reduce_mod(self):
        f = qpoly(Fraction(1, 2), 3)
        assert f.reduce_mod(5) == fpoly(5, 3, 3)

    def test_field_mismatch(self):
        with pytest.raises(AlgebraError):
            qpoly(1, 1) + fpoly(5, 1, 1)


class TestDivrem:
    @pytest.mark.parametrize(
        "a, b, q, r",
        [
            (qpoly(1, 0, 1), qpoly(0, 1), qpoly(0, 1), qpoly(1)),
            (qpoly(1, 0, 0, 0, 1), qpoly(0, 0, 1), qpoly(0, 0, 1), qpoly(1)),
            (qpoly(0, 3, 0, 2), qpoly(0, 2), qpoly(Fraction(3, 2), 0, 1), Poly.zero(QQ)),
        ],
    )
    def test_examples(self, a, b, q, r):
        assert divrem(a, b) == (q, r)

    def test_division_identity(self, rng):
        for _ in range(30):
            a, b = random_qpoly(rng, rng.randint(0, 7)), random_qpoly(rng, rng.randint(0, 4))
            q, r = divrem(a, b)
            assert q * b + r == a
            assert r.degree < b.degree

    def test_division_by_zero(self):
        with pytest.raises(AlgebraError):
            divrem(X, Poly.zero(QQ))


class TestResultantDiscriminant:
    @pytest.mark.parametrize(
        "f, expected",
        [
            (qpoly(1, 0, 1), -4),
            (qpoly(0, -1, 0, 1), 4),
            (qpoly(1, -2, 1), 0),
        ],
    )
    def test_discriminant_examples(self, f, expected):
        assert discriminant(f) == expected

    def test_resultant_matches_sympy(self, rng):
        for _ in range(25):
            a, b = random_qpoly(rng, rng.randint(1, 6)), random_qpoly(rng, rng.randint(1, 6))
            assert resultant(a, b) == sylvester_resultant(a, b)

    def test_discriminant_matches_sympy(self, rng):
        for _ in range(25):
            f = random_qpoly(rng, rng.randint(2, 8))
            assert discriminant(f) == as_fraction(sympy.discriminant(to_sympy(f), SX))

    def test_resultant_over_prime_field_matches_sympy(self, rng):
        p = 101
        for _ in range(20):
            a = Poly([rng.randrange(p) for _ in range(5)] + [1], PrimeField(p))
            b = Poly([rng.randrange(p) for _ in range(4)] + [rng.randrange(1, p)], PrimeField(p))
            expected = int(sympy.resultant(to_sympy(a), to_sympy(b), SX)) % p
            assert resultant(a, b) == expected

    def test_discriminant_when_derivative_drops_degree(self):
        # x^5 - x over F_5 has derivative -1
        f = fpoly(5, 0, -1, 0, 0, 0, 1)
        assert discriminant(f) != 0
        assert discriminant(fpoly(5, 0, 0, 0, 0, 0, 1)) == 0

    def test_resultant_vanishes_on_common_root(self):
        assert resultant((X - 2) * (X + 1), (X - 2) * (X ** 2 + 3)) == 0


class TestSquarefree:
    def test_examples(self):
        assert is_squarefree(qpoly(1, 0, 0, 0, 1))
        assert not is_squarefree((X + 1) ** 2 * (X - 1))
        assert not is_squarefree(fpoly(3, 1, 1, 1))

    def test_zero_polynomial(self):
        with pytest.raises(AlgebraError):
            is_squarefree(Poly.zero(QQ))

    def test_agrees_with_vanishing_discriminant(self, rng):
        for i in range(500):
            degree = rng.randint(2, 10)
            if i % 2:
                F = PrimeField(rng.choice([3, 5, 7]))
                f = Poly([rng.randrange(F.p) for _ in range(degree)] + [rng.randrange(1, F.p)], F)
            else:
                f = random_qpoly(rng, degree)
                if i % 4 == 0 and degree <= 8:
                    f = f * (X - rng.randint(-3, 3)) ** 2
            assert (discriminant(f) == 0) == (not is_squarefree(f)), str(f)


class TestSqrtPolynomialPart:
    def test_perfect_square(self):
        A = qpoly(1, 3, 1)
        assert sqrt_polynomial_part(A * A) == A

    def test_quartic(self):
        assert sqrt_polynomial_part(qpoly(1, 0, 0, 0, 1)) == X ** 2

    def test_residual_degree_bound(self):
        f = qpoly(0, 0, 0, 0, 0, 4, 4)
        A = sqrt_polynomial_part(f)
        assert A == qpoly(Fraction(1, 8), Fraction(-1, 4), 1, 2)
        assert (f - A * A).degree <= A.degree - 1

    def test_postcondition_random(self, rng):
        for _ in range(20):
            d = rng.randint(2, 6)
            lead = Fraction(rng.randint(1, 5), rng.randint(1, 3)) ** 2
            f = random_qpoly(rng, 2 * d - 1) + Poly.monomial(lead, 2 * d, QQ)
            A = sqrt_polynomial_part(f)
            assert A.degree == d
            assert A.lc ** 2 == f.lc
            assert (f - A * A).degree <= d - 1

    def test_odd_degree_rejected(self):
        with pytest.raises(AlgebraError):
            sqrt_polynomial_part(qpoly(1, 0, 0, 1))

    def test_non_square_leading_coefficient(self):
        with pytest.raises(NotASquareError):
            sqrt_polynomial_part(qpoly(1, 0, 2))
