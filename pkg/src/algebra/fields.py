"""
Exact coefficient fields: the rationals and the prime fields F_p.

Field elements are plain Python values so polynomial loops stay cheap:
`fractions.Fraction` over QQ, canonical ints in [0, p) over F_p. The field
object is the tag that says how to normalize them.
"""
import re
from abc import ABC, abstractmethod
from fractions import Fraction
from math import isqrt
from typing import Any, Union

from sympy import isprime
from sympy.ntheory import is_quad_residue, sqrt_mod

from src.core.exceptions import AlgebraError, NotASquareError

FieldElement = Union[Fraction, int]

_RATIONAL_TEXT = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


class Field(ABC):
    """An exact field of characteristic 0 or an odd/even prime."""

    characteristic: int

    @property
    def zero(self) -> FieldElement:
        return self.convert(0)

    @property
    def one(self) -> FieldElement:
        return self.convert(1)

    @abstractmethod
    def convert(self, value: Any) -> FieldElement:
        """Coerce an int, Fraction or coefficient string into the field."""

    @abstractmethod
    def reduce(self, value: FieldElement) -> FieldElement:
        """Canonicalize the raw result of +, - or * on field elements."""

    @abstractmethod
    def inverse(self, value: FieldElement) -> FieldElement:
        pass

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.reduce(a * self.inverse(b))

    @abstractmethod
    def is_square(self, value: FieldElement) -> bool:
        pass

    @abstractmethod
    def sqrt(self, value: FieldElement) -> FieldElement:
        """Canonical square root; raises NotASquareError."""

    def to_str(self, value: FieldElement) -> str:
        return str(value)

    def require_odd_characteristic(self) -> None:
        if self.characteristic == 2:
            raise AlgebraError("Characteristic 2 is not supported here", error_code="characteristic_two")


def parse_rational(text: str) -> Fraction:
    """Parse `n` or `n/d` exactly; decimals and exponents are rejected."""
    if not isinstance(text, str) or not _RATIONAL_TEXT.match(text):
        raise AlgebraError(f"Not a rational literal: {text!r}", error_code="bad_rational")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise AlgebraError(f"Zero denominator in {text.strip()!r}", error_code="bad_rational") from None


class RationalField(Field):
    """The field QQ; elements are reduced Fractions with positive denominator."""

    characteristic = 0

    def convert(self, value: Any) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, bool) or isinstance(value, float):
            raise AlgebraError(f"Refusing inexact coefficient {value!r}", error_code="inexact_coefficient")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return parse_rational(value)
        raise AlgebraError(f"Cannot convert {value!r} to a rational", error_code="bad_rational")

    def reduce(self, value: FieldElement) -> Fraction:
        return value if type(value) is Fraction else Fraction(value)

    def inverse(self, value: FieldElement) -> Fraction:
        if value == 0:
            raise AlgebraError("Division by zero in QQ", error_code="division_by_zero")
        return 1 / Fraction(value)

    def is_square(self, value: FieldElement) -> bool:
        value = Fraction(value)
        if value < 0:
            return False
        num, den = value.numerator, value.denominator
        return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den

    def sqrt(self, value: FieldElement) -> Fraction:
        """Nonnegative rational square root."""
        if not self.is_square(value):
            raise NotASquareError(f"{value} is not a square in QQ")
        value = Fraction(value)
        return Fraction(isqrt(value.numerator), isqrt(value.denominator))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def __repr__(self) -> str:
        return "QQ"


class PrimeField(Field):
    """The field F_p for a prime p."""

    __slots__ = ("p",)

    def __init__(self, p: int) -> None:
        if not isinstance(p, int) or isinstance(p, bool) or not isprime(p):
            raise AlgebraError(f"Modulus {p!r} is not a prime", error_code="bad_modulus")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    def convert(self, value: Any) -> int:
        if isinstance(value, str):
            value = parse_rational(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise AlgebraError(
                    f"{self.p} divides the denominator of {value}",
                    error_code="denominator_divisible",
                )
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, int) and not isinstance(value, bool):
            return value % self.p
        raise AlgebraError(f"Cannot convert {value!r} to F_{self.p}", error_code="bad_element")

    def reduce(self, value: FieldElement) -> int:
        return value % self.p

    def inverse(self, value: FieldElement) -> int:
        if value % self.p == 0:
            raise AlgebraError(f"Division by zero in F_{self.p}", error_code="division_by_zero")
        return pow(value, -1, self.p)

    def is_square(self, value: FieldElement) -> bool:
        value %= self.p
        return value == 0 or self.p == 2 or is_quad_residue(value, self.p)

    def sqrt(self, value: FieldElement) -> int:
        """Least nonnegative square root."""
        value %= self.p
        if value == 0 or self.p == 2:
            return value
        roots = sqrt_mod(value, self.p, all_roots=True)
        if not roots:
            raise NotASquareError(f"{value} is not a square in F_{self.p}")
        return min(roots)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


QQ = RationalField()
