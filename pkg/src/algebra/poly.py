"""
Dense univariate polynomials over an exact field.
"""
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple, Union

from src.algebra.fields import QQ, Field, FieldElement, PrimeField
from src.core.exceptions import AlgebraError


class _NegativeInfinity:
    """Degree of the zero polynomial: orders below every int, refuses arithmetic."""

    __slots__ = ()

    def __lt__(self, other: object) -> bool:
        return not isinstance(other, _NegativeInfinity)

    def __le__(self, other: object) -> bool:
        return True

    def __gt__(self, other: object) -> bool:
        return False

    def __ge__(self, other: object) -> bool:
        return isinstance(other, _NegativeInfinity)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _NegativeInfinity)

    def __hash__(self) -> int:
        return hash("-oo")

    def __repr__(self) -> str:
        return "-oo"


NEG_INF = _NegativeInfinity()

Degree = Union[int, _NegativeInfinity]
Coefficient = Union[FieldElement, str]


class Poly:
    """
    Immutable dense polynomial in x. `coeffs` is ascending by degree with a
    nonzero last entry; the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable[Coefficient] = (), field: Field = QQ) -> None:
        values = [field.convert(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))
        object.__setattr__(self, "field", field)

    @classmethod
    def _raw(cls, values: List[FieldElement], field: Field) -> "Poly":
        # values must already be canonical field elements
        while values and values[-1] == 0:
            values.pop()
        poly = cls.__new__(cls)
        object.__setattr__(poly, "coeffs", tuple(values))
        object.__setattr__(poly, "field", field)
        return poly

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs, self.field))

    # --- Constructors ---

    @classmethod
    def x(cls, field: Field = QQ) -> "Poly":
        return cls._raw([field.zero, field.one], field)

    @classmethod
    def constant(cls, value: Coefficient, field: Field = QQ) -> "Poly":
        return cls([value], field)

    @classmethod
    def zero(cls, field: Field = QQ) -> "Poly":
        return cls._raw([], field)

    @classmethod
    def one(cls, field: Field = QQ) -> "Poly":
        return cls._raw([field.one], field)

    @classmethod
    def monomial(cls, value: Coefficient, k: int, field: Field = QQ) -> "Poly":
        return cls([0] * k + [value], field)

    @classmethod
    def from_strings(cls, coeffs: Sequence[str], field: Field = QQ) -> "Poly":
        """Inverse of `to_strings`: ascending coefficient strings such as "3/4"."""
        return cls(coeffs, field)

    # --- Basic properties ---

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __getitem__(self, k: int) -> FieldElement:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def __len__(self) -> int:
        return len(self.coeffs)

    def to_strings(self) -> List[str]:
        return [self.field.to_str(c) for c in self.coeffs]

    # --- Arithmetic ---

    def _coerce(self, other: Any) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise AlgebraError(f"Field mismatch: {self.field!r} vs {other.field!r}", error_code="field_mismatch")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.constant(other, self.field)
        return NotImplemented

    def __add__(self, other: Any) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.reduce(out[i] + c)
        return Poly._raw(out, F)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly._raw([F.reduce(-c) for c in self.coeffs], F)

    def __sub__(self, other: Any) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other: Any) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly._raw([F.reduce(c) for c in out], F)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise AlgebraError(f"Exponent must be a nonnegative integer, got {n!r}", error_code="bad_exponent")
        result, base = Poly.one(self.field), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: Coefficient) -> "Poly":
        F = self.field
        c = F.convert(c)
        if c == 0:
            return Poly.zero(F)
        return Poly._raw([F.reduce(c * a) for a in self.coeffs], F)

    def divrem(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        """Euclidean division: self = q * other + r with deg r < deg other."""
        other = self._coerce(other)
        if other is NotImplemented:
            raise AlgebraError("divrem needs a polynomial divisor", error_code="bad_divisor")
        if other.is_zero:
            raise AlgebraError("Division by the zero polynomial", error_code="division_by_zero")
        F = self.field
        da, db = len(self.coeffs) - 1, len(other.coeffs) - 1
        if da < db:
            return Poly.zero(F), self
        inv = F.inverse(other.lc)
        rem = list(self.coeffs)
        b = other.coeffs
        quo = [F.zero] * (da - db + 1)
        for k in range(da - db, -1, -1):
            c = F.reduce(rem[db + k] * inv)
            quo[k] = c
            if c == 0:
                continue
            for j in range(db):
                rem[j + k] = F.reduce(rem[j + k] - c * b[j])
            rem[db + k] = F.zero
        return Poly._raw(quo, F), Poly._raw(rem[:db], F)

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        return self.divrem(other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divrem(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divrem(other)[1]

    def exquo(self, other: "Poly") -> "Poly":
        """Exact quotient; a nonzero remainder is an error."""
        q, r = self.divrem(other)
        if not r.is_zero:
            raise AlgebraError(f"Inexact division of {self} by {other}", error_code="inexact_division")
        return q

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(self.field.inverse(self.lc))

    def derivative(self) -> "Poly":
        F = self.field
        return Poly._raw([F.reduce(k * c) for k, c in enumerate(self.coeffs)][1:], F)

    def __call__(self, value: Any) -> Any:
        """Horner evaluation at a field element or a polynomial."""
        if isinstance(value, Poly):
            return self.compose(value)
        F = self.field
        value = F.convert(value)
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.reduce(acc * value + c)
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        inner = self._coerce(inner)
        acc = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly._raw([c], self.field)
        return acc

    def shift(self, c: Coefficient) -> "Poly":
        """The translate x -> x + c."""
        return self.compose(Poly.x(self.field) + Poly.constant(c, self.field))

    def pow_mod(self, n: int, modulus: "Poly") -> "Poly":
        result, base = Poly.one(self.field), self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            n >>= 1
            if n:
                base = (base * base) % modulus
        return result

    def reduce_mod(self, p: int) -> "Poly":
        """Coefficient-wise image in F_p; fails if p divides a denominator."""
        F = PrimeField(p)
        return Poly([F.convert(c) for c in self.coeffs], F)

    # --- Euclidean algorithms ---

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd; gcd(0, 0) = 0."""
        a, b = self, self._coerce(other)
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "Poly") -> Tuple["Poly", "Poly", "Poly"]:
        """Return (d, s, t) with d = gcd monic and s*self + t*other = d."""
        F = self.field
        r0, r1 = self, self._coerce(other)
        s0, s1 = Poly.one(F), Poly.zero(F)
        t0, t1 = Poly.zero(F), Poly.one(F)
        while not r1.is_zero:
            q, r = r0.divrem(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero:
            return r0, s0, t0
        inv = F.inverse(r0.lc)
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    # --- Comparison and display ---

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == Poly.constant(other, self.field).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({self}, {self.field!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms: List[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            text = self.field.to_str(c)
            negative = text.startswith("-")
            if negative:
                text = text[1:]
            if k == 0:
                body = text
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if text == "1" else f"{text}*{power}"
            if not terms:
                terms.append(f"-{body}" if negative else body)
            else:
                terms.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(terms)
