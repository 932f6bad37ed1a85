"""Truncated Laurent series sum_{j >= lead} c_j t^j with tracked precision.

``prec`` is the truncation order: coefficients of t^j for j >= prec are
unknown.  ``prec = math.inf`` marks an exact (finite) series, so the
structurally zero series is distinguishable from one whose known
coefficients merely happen to vanish.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InsufficientPrecisionError
from .fields import Field, FieldElement
from .poly import Poly

INF = math.inf
DEFAULT_PRECISION = 20


class LaurentSeries:
    """Immutable truncated Laurent series over a :class:`Field`.

    After construction the series is normalized: either the coefficient at
    ``lead`` is nonzero, or no coefficients are stored.  A series with no
    stored coefficients and finite ``prec`` is "zero to known precision"
    and has ``lead == prec``.
    """

    __slots__ = ("field", "lead", "c", "prec")

    def __init__(self, field: Field, lead: int, coeffs: Iterable = (), prec=INF):
        c = [field.norm(v.raw if isinstance(v, FieldElement) else v) for v in coeffs]
        self._set(field, lead, c, prec)

    @classmethod
    def _raw(cls, field, lead, c, prec) -> LaurentSeries:
        s = cls.__new__(cls)
        s._set(field, lead, c, prec)
        return s

    def _set(self, field, lead, c, prec):
        if prec != INF:
            prec = int(prec)
            c = c[: max(prec - lead, 0)]
        i = 0
        while i < len(c) and not c[i]:
            i += 1
        c = c[i:]
        lead += i
        if prec == INF:
            while c and not c[-1]:
                c.pop()
            if not c:
                lead = 0
        elif not c:
            lead = prec
        self.field = field
        self.lead = lead
        self.c = tuple(c)
        self.prec = prec

    # constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> LaurentSeries:
        return cls._raw(field, 0, [], INF)

    @classmethod
    def monomial(cls, field: Field, exponent: int, coeff=1) -> LaurentSeries:
        return cls(field, exponent, [coeff])

    @classmethod
    def big_o(cls, field: Field, order: int) -> LaurentSeries:
        return cls._raw(field, order, [], order)

    @classmethod
    def from_poly(cls, p: Poly, prec=INF) -> LaurentSeries:
        return cls._raw(p.field, 0, list(p.c), prec)

    # queries -------------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.prec == INF

    def is_zero(self) -> bool:
        """Structurally zero (exact)."""
        return self.is_exact and not self.c

    def is_known_zero_to_prec(self) -> bool:
        return not self.c

    def coeff(self, j: int) -> FieldElement:
        if j >= self.prec:
            raise InsufficientPrecisionError(f"coefficient of t^{j} is beyond precision {self.prec}")
        k = j - self.lead
        if 0 <= k < len(self.c):
            return FieldElement(self.field, self.c[k])
        return self.field.zero

    def coeff_raw(self, j: int):
        k = j - self.lead
        if 0 <= k < len(self.c):
            return self.c[k]
        return self.field.zero_raw

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, v) for v in self.c)

    @property
    def top(self):
        """One past the last stored exponent."""
        return self.lead + len(self.c)

    def truncate(self, prec) -> LaurentSeries:
        if prec >= self.prec:
            return self
        return LaurentSeries._raw(self.field, self.lead, list(self.c), prec)

    def agrees_with(self, other: LaurentSeries, prec=None) -> bool:
        """True if both series have the same coefficients below ``prec``
        (default: the smaller of the two precisions)."""
        limit = min(self.prec, other.prec) if prec is None else prec
        if limit > min(self.prec, other.prec):
            raise InsufficientPrecisionError("comparison beyond known precision")
        if limit == INF:
            return self.lead == other.lead and self.c == other.c
        lo = min(self.lead, other.lead)
        return all(self.coeff_raw(j) == other.coeff_raw(j) for j in range(lo, int(limit)))

    def __eq__(self, other):
        return (
            isinstance(other, LaurentSeries)
            and self.field == other.field
            and self.lead == other.lead
            and self.c == other.c
            and self.prec == other.prec
        )

    def __hash__(self):
        return hash((self.lead, self.c, self.prec))

    def __repr__(self):
        return f"LaurentSeries({self})"

    def __str__(self):
        return format_series(self)

    def to_json(self) -> dict:
        return {
            "lead": self.lead if self.c else None,
            "coeffs": [FieldElement(self.field, v).to_json() for v in self.c],
            "prec": None if self.is_exact else self.prec,
        }

    # arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        F = self.field
        prec = min(self.prec, other.prec)
        lo = min(self.lead, other.lead)
        hi = max(self.top, other.top)
        if prec != INF:
            hi = min(hi, prec)
        out = [F.add(self.coeff_raw(j), other.coeff_raw(j)) for j in range(lo, hi)]
        return LaurentSeries._raw(F, lo, out, prec)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return LaurentSeries._raw(F, self.lead, [F.neg(v) for v in self.c], self.prec)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(F)
        prec = min(self.prec + other.lead, other.prec + self.lead)
        lead = self.lead + other.lead
        a, b = self.c, other.c
        n = len(a) + len(b) - 1 if a and b else 0
        if prec != INF:
            n = min(n, max(int(prec) - lead, 0))
        out = [0] * n
        for i, u in enumerate(a):
            if i >= n:
                break
            if not u:
                continue
            for j in range(min(len(b), n - i)):
                out[i + j] += u * b[j]
        out = [F.norm(v) for v in out]
        return LaurentSeries._raw(F, lead, out, prec)

    __rmul__ = __mul__

    def scale(self, s) -> LaurentSeries:
        F = self.field
        s = s.raw if isinstance(s, FieldElement) else F.norm(s)
        if not s:
            return LaurentSeries.zero(F)
        return LaurentSeries._raw(F, self.lead, [F.mul(v, s) for v in self.c], self.prec)

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by t^k."""
        return LaurentSeries._raw(self.field, self.lead + k, list(self.c), self.prec + k)

    def inverse(self, prec=None) -> LaurentSeries:
        """Multiplicative inverse.

        For an exact non-monomial input the result is truncated at ``prec``
        (absolute; default ``DEFAULT_PRECISION``).
        """
        F = self.field
        if not self.c:
            raise ZeroDivisionError("inverse of a series with no known nonzero coefficient")
        lead = -self.lead
        if self.is_exact and len(self.c) == 1:
            return LaurentSeries._raw(F, lead, [F.inv(self.c[0])], INF)
        if self.is_exact:
            out_prec = DEFAULT_PRECISION if prec is None else prec
        else:
            out_prec = lead + (self.prec - self.lead)
            if prec is not None:
                out_prec = min(out_prec, prec)
        n = max(int(out_prec) - lead, 0)
        a = self.c
        inv0 = F.inv(a[0])
        out = []
        for k in range(n):
            if k == 0:
                out.append(inv0)
                continue
            acc = 0
            for i in range(1, min(k, len(a) - 1) + 1):
                acc += a[i] * out[k - i]
            out.append(F.mul(F.neg(F.norm(acc)), inv0))
        return LaurentSeries._raw(F, lead, out, out_prec)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> LaurentSeries:
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentSeries.monomial(self.field, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _coerce(self, other) -> LaurentSeries:
        if isinstance(other, LaurentSeries):
            if other.field != self.field:
                raise ValueError("series over different fields")
            return other
        if isinstance(other, FieldElement):
            return LaurentSeries._raw(self.field, 0, [self.field(other).raw], INF)
        if isinstance(other, (int, Fraction)):
            return LaurentSeries._raw(self.field, 0, [self.field.norm(other)], INF)
        raise TypeError(f"cannot combine LaurentSeries with {type(other).__name__}")


def ls_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a + b


def ls_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a * b


def ls_inv(a: LaurentSeries, prec=None) -> LaurentSeries:
    return a.inverse(prec)


def ls_scale(a: LaurentSeries, s) -> LaurentSeries:
    return a.scale(s)


def ls_degree(V: LaurentSeries):
    """Exponent of the first nonzero coefficient; ``inf`` for the zero series."""
    if V.c:
        return V.lead
    if V.is_exact:
        return INF
    raise InsufficientPrecisionError(
        f"all coefficients below t^{V.prec} vanish; re-expand at higher precision"
    )


def compose_poly(p: Poly, s: LaurentSeries) -> LaurentSeries:
    """p(s) by Horner's rule."""
    F = p.field
    acc = LaurentSeries.zero(F)
    for v in reversed(p.c):
        acc = acc * s + LaurentSeries._raw(F, 0, [v], INF)
    return acc


def format_series(s: LaurentSeries, var: str = "t") -> str:
    F = s.field
    parts = []
    for k, v in enumerate(s.c):
        if not v:
            continue
        j = s.lead + k
        neg = F.p is None and v < 0
        mag = -v if neg else v
        mono = "" if j == 0 else (var if j == 1 else f"{var}^{j}")
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    if not s.is_exact:
        o = f"O({var}^{s.prec})"
        parts.append(f"+ {o}" if parts else o)
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class MetricConfig:
    """Base ``c`` of the metric |f| = c^v, an exact rational in (0, 1)."""

    c: Fraction = Fraction(1, 2)

    def __post_init__(self):
        c = Fraction(self.c)
        if not 0 < c < 1:
            raise ValueError("metric base must satisfy 0 < c < 1")
        object.__setattr__(self, "c", c)

    def power(self, v) -> Fraction:
        if v == INF:
            return Fraction(0)
        return self.c ** v
