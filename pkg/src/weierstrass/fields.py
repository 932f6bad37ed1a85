"""Exact arithmetic in F_p and Q.

A :class:`Field` describes the ambient field and knows how to do arithmetic
on *raw* representatives (``int`` residues for F_p, :class:`fractions.Fraction`
for Q).  Polynomials and series store raw values internally for speed;
:class:`FieldElement` is the public, immutable scalar type.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterator, Union

from .errors import FieldMismatchError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Either the prime field F_p or the rationals Q.

    >>> Field(5)
    Field('Fp:5')
    >>> Field.parse("Q").is_rational
    True
    """

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if not isinstance(p, int) or not is_prime(p):
                raise ValueError(f"modulus {p!r} is not prime")
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @classmethod
    def rationals(cls) -> Field:
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> Field:
        text = text.strip()
        if text.upper() == "Q":
            return cls(None)
        head, sep, tail = text.partition(":")
        if sep and head.strip().lower() == "fp":
            try:
                return cls(int(tail))
            except ValueError:
                pass
        raise ValueError(f"bad field {text!r}; expected 'Fp:<p>' or 'Q'")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __str__(self):
        return "Q" if self.p is None else f"Fp:{self.p}"

    def __repr__(self):
        return f"Field({str(self)!r})"

    # raw arithmetic ------------------------------------------------------

    def norm(self, v) -> Union[int, Fraction]:
        """Canonical raw representative of an int or rational ``v``."""
        if self.p is None:
            return Fraction(v)
        if isinstance(v, int):
            return v % self.p
        v = Fraction(v)
        if v.denominator % self.p == 0:
            raise ZeroDivisionError(f"{v} has no image in {self}")
        return v.numerator * pow(v.denominator, -1, self.p) % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else a * b % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p is None else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            a, n = self.inv(a), -n
        if self.p is None:
            return a ** n
        return pow(a, n, self.p)

    @property
    def zero_raw(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one_raw(self):
        return Fraction(1) if self.p is None else 1

    # element construction ------------------------------------------------

    def __call__(self, v) -> FieldElement:
        if isinstance(v, FieldElement):
            if v.field != self:
                raise FieldMismatchError(f"{v!r} is not in {self}")
            return v
        return FieldElement(self, self.norm(v))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, self.zero_raw)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, self.one_raw)

    def literal(self, text: str) -> FieldElement:
        """Parse an integer or ``a/b`` literal."""
        text = text.strip()
        num, sep, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"bad field literal {text!r}") from None
        if d == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return self(Fraction(n, d))

    def elements(self) -> Iterator[FieldElement]:
        if self.p is None:
            raise ValueError("Q is not enumerable")
        for v in range(self.p):
            yield FieldElement(self, v)


class FieldElement:
    """Immutable element of a :class:`Field` in canonical form."""

    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "raw", raw)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> FieldElement | None:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Rational)):
            return FieldElement(self.field, self.field.norm(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.raw, o.raw))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.raw, o.raw))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(o.raw, self.raw))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.raw, o.raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.raw, o.raw))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(o.raw, self.raw))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.raw))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.raw, n))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.raw))

    def __bool__(self):
        return bool(self.raw)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.raw == other.raw
        if isinstance(other, (int, Rational)):
            try:
                return self.raw == self.field.norm(other)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.raw))

    def __str__(self):
        return str(self.raw)

    def __repr__(self):
        return f"{self.field}({self.raw})"

    def to_json(self):
        """Residue as an int for F_p; ``"a/b"`` (or ``"a"``) string for Q."""
        return self.raw if self.field.p is not None else str(self.raw)


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def fe_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def fe_neg(a: FieldElement) -> FieldElement:
    return -a


def fe_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def fe_pow(a: FieldElement, n: int) -> FieldElement:
    return a ** n


def enumerate_field(field: Field) -> list[FieldElement]:
    return list(field.elements())
