"""The function field K(C) of a Weierstrass curve.

Every element has a unique representative (a(x) + b(x) y) / d(x) with d monic
and gcd(a, b, d) = 1.  Products are reduced with the curve relation

    y^2 = -(a1 x + a3) y + (x^3 + a2 x^2 + a4 x + a6),

and inverses use the conjugate y -> -y - a1 x - a3, whose product with y is a
polynomial in x alone.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .curve import ProjectivePoint, WeierstrassCurve
from .errors import DomainError, FieldMismatchError
from .fields import FieldElement
from .poly import HomPoly, Poly, format_poly, poly_gcd


def _rel_polys(curve: WeierstrassCurve) -> tuple[Poly, Poly]:
    """(s, f) with y^2 = f(x) - s(x) y."""
    F = curve.field
    a1, a2, a3, a4, a6 = (c.raw for c in curve.a_invariants)
    s = Poly._raw(F, [a3, a1])
    f = Poly._raw(F, [a6, a4, a2, F.one_raw])
    return s, f


def reduce_canonical(curve: WeierstrassCurve, coeffs: Sequence[Poly]) -> tuple[Poly, Poly]:
    """Reduce sum_k coeffs[k](x) y^k to a(x) + b(x) y using the curve relation."""
    F = curve.field
    c = list(coeffs) or [Poly.zero(F)]
    while len(c) < 2:
        c.append(Poly.zero(F))
    s, f = _rel_polys(curve)
    for k in range(len(c) - 1, 1, -1):
        top = c[k]
        if top:
            c[k - 2] = c[k - 2] + top * f
            c[k - 1] = c[k - 1] - top * s
    return c[0], c[1]


def _wdeg(deg) -> float:
    return 2 * deg


class CurveFunction:
    """Element (a + b y) / d of K(C) in canonical form."""

    __slots__ = ("curve", "a", "b", "d")

    def __init__(self, curve: WeierstrassCurve, a: Poly, b: Poly, d: Poly | None = None):
        F = curve.field
        if d is None:
            d = Poly.const(F, 1)
        if not d:
            raise ZeroDivisionError("zero denominator in function")
        if not a and not b:
            a, b, d = Poly.zero(F), Poly.zero(F), Poly.const(F, 1)
        else:
            if d.degree > 0:
                g = poly_gcd(d, a)
                if g.degree > 0:
                    g = poly_gcd(g, b)
                    if g.degree > 0:
                        a, b, d = a // g, b // g, d // g
            lc = d.lc
            if lc != 1:
                s = F.inv(lc)
                a, b, d = a.scale(s), b.scale(s), d.scale(s)
        self.curve = curve
        self.a, self.b, self.d = a, b, d

    # constructors -------------------------------------------------------

    @classmethod
    def const(cls, curve: WeierstrassCurve, v) -> CurveFunction:
        F = curve.field
        v = v.raw if isinstance(v, FieldElement) else v
        return cls(curve, Poly.const(F, v), Poly.zero(F))

    @classmethod
    def x(cls, curve: WeierstrassCurve) -> CurveFunction:
        F = curve.field
        return cls(curve, Poly.x(F), Poly.zero(F))

    @classmethod
    def y(cls, curve: WeierstrassCurve) -> CurveFunction:
        F = curve.field
        return cls(curve, Poly.zero(F), Poly.const(F, 1))

    @classmethod
    def from_y_poly(cls, curve: WeierstrassCurve, coeffs: Sequence[Poly], d: Poly | None = None) -> CurveFunction:
        a, b = reduce_canonical(curve, coeffs)
        return cls(curve, a, b, d)

    # queries ------------------------------------------------------------

    @property
    def field(self):
        return self.curve.field

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def __bool__(self):
        return not self.is_zero()

    def is_constant(self) -> bool:
        return not self.b and self.a.degree <= 0 and self.d.degree == 0

    @property
    def numerator_wdeg(self):
        """Weighted degree of a + b y (x counts 2, y counts 3)."""
        return max(_wdeg(self.a.degree), _wdeg(self.b.degree) + 3)

    @property
    def denominator_wdeg(self):
        return _wdeg(self.d.degree)

    def key(self):
        return (self.a.c, self.b.c, self.d.c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = CurveFunction.const(self.curve, self.field.norm(
                other.raw if isinstance(other, FieldElement) else other))
        if not isinstance(other, CurveFunction):
            return NotImplemented
        return self.curve == other.curve and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"CurveFunction({self})"

    def __str__(self):
        a, b = self.a, self.b
        if not b:
            num = format_poly(a, "x")
        else:
            bs = format_poly(b, "x")
            multi = sum(1 for v in b.c if v) > 1 or bs.startswith("-")
            yterm = "y" if b.is_one() else (f"({bs})*y" if multi else f"{bs}*y")
            if not a:
                num = yterm
            else:
                num = f"{format_poly(a, 'x')} + {yterm}"
        if self.d.is_one():
            return num
        return f"({num})/({format_poly(self.d, 'x')})"

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> CurveFunction:
        if isinstance(other, CurveFunction):
            if other.curve != self.curve:
                raise FieldMismatchError("functions live on different curves")
            return other
        if isinstance(other, FieldElement):
            return CurveFunction.const(self.curve, self.field(other))
        if isinstance(other, (int, Fraction)):
            return CurveFunction.const(self.curve, self.field.norm(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.d == o.d:
            return CurveFunction(self.curve, self.a + o.a, self.b + o.b, self.d)
        return CurveFunction(
            self.curve, self.a * o.d + o.a * self.d, self.b * o.d + o.b * self.d, self.d * o.d
        )

    __radd__ = __add__

    def __neg__(self):
        return CurveFunction(self.curve, -self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        s, f = _rel_polys(self.curve)
        a1, b1, a2, b2 = self.a, self.b, o.a, o.b
        bb = b1 * b2
        a = a1 * a2 + bb * f
        b = a1 * b2 + a2 * b1 - bb * s
        return CurveFunction(self.curve, a, b, self.d * o.d)

    __rmul__ = __mul__

    def conjugate(self) -> CurveFunction:
        """Image under y -> -y - a1 x - a3 (the other root of the curve relation)."""
        s, _ = _rel_polys(self.curve)
        return CurveFunction(self.curve, self.a - self.b * s, -self.b, self.d)

    def norm_numerator(self) -> Poly:
        """(a + b y)(a + b y-bar) = a^2 - a b s - b^2 f, a polynomial in x."""
        s, f = _rel_polys(self.curve)
        a, b = self.a, self.b
        return a * a - a * b * s - b * b * f

    def inverse(self) -> CurveFunction:
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        s, _ = _rel_polys(self.curve)
        n = self.norm_numerator()
        return CurveFunction(self.curve, self.d * (self.a - self.b * s), -(self.d * self.b), n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CurveFunction.const(self.curve, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # conversions ---------------------------------------------------------

    def to_homogeneous(self) -> HomogeneousFraction:
        """A homogeneous representative F/G obtained by clearing powers of Z."""
        F = self.field
        e = int(max(self.a.degree, self.b.degree + 1, self.d.degree))
        num: dict = {}
        for i, v in enumerate(self.a.c):
            num[(i, 0, e - i)] = v
        for i, v in enumerate(self.b.c):
            num[(i, 1, e - 1 - i)] = v
        den = {(i, 0, e - i): v for i, v in enumerate(self.d.c)}
        return HomogeneousFraction(HomPoly(F, num), HomPoly(F, den))

    def eval_affine(self, x: FieldElement, y: FieldElement) -> FieldElement:
        """(a(x)+b(x)y)/d(x) at an affine point; raises ZeroDivisionError if d(x) = 0."""
        return (self.a(x) + self.b(x) * y) / self.d(x)


class HomogeneousFraction:
    """F(X, Y, Z) / G(X, Y, Z) with F, G homogeneous of the same degree."""

    __slots__ = ("num", "den")

    def __init__(self, num: HomPoly, den: HomPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        dn, dd = num.degree, den.degree
        if dd is None or (dn is None) or (not num.is_zero() and dn != dd):
            raise ValueError("numerator and denominator must be homogeneous of equal degree")
        self.num, self.den = num, den

    @property
    def field(self):
        return self.den.field

    def __repr__(self):
        return f"HomogeneousFraction(({self.num})/({self.den}))"

    def __str__(self):
        return f"({self.num})/({self.den})"

    def __mul__(self, other: HomogeneousFraction) -> HomogeneousFraction:
        return HomogeneousFraction(self.num * other.num, self.den * other.den)

    def eval_at(self, P: ProjectivePoint) -> FieldElement:
        g = self.den.eval_raw(P.raw)
        if not g:
            raise ZeroDivisionError("denominator vanishes at the point")
        F = self.field
        return F(F.div(self.num.eval_raw(P.raw), g))


def _dehomogenize(curve: WeierstrassCurve, h: HomPoly) -> tuple[Poly, Poly]:
    parts = h.dehomogenize()
    if not parts:
        return Poly.zero(curve.field), Poly.zero(curve.field)
    top = max(parts)
    coeffs = [parts.get(j, Poly.zero(curve.field)) for j in range(top + 1)]
    return reduce_canonical(curve, coeffs)


def from_homogeneous(hf: HomogeneousFraction, curve: WeierstrassCurve) -> CurveFunction:
    if hf.field != curve.field:
        raise FieldMismatchError("fraction and curve over different fields")
    na, nb = _dehomogenize(curve, hf.num)
    da, db = _dehomogenize(curve, hf.den)
    if not da and not db:
        raise DomainError("denominator vanishes identically on the curve")
    num = CurveFunction(curve, na, nb)
    den = CurveFunction(curve, da, db)
    return num / den


# thin functional aliases --------------------------------------------------

def ff_add(f: CurveFunction, g: CurveFunction) -> CurveFunction:
    return f + g


def ff_sub(f: CurveFunction, g: CurveFunction) -> CurveFunction:
    return f - g


def ff_mul(f: CurveFunction, g: CurveFunction) -> CurveFunction:
    return f * g


def ff_div(f: CurveFunction, g: CurveFunction) -> CurveFunction:
    return f / g


def ff_eq(f: CurveFunction, g: CurveFunction) -> bool:
    return (f - g).is_zero()


def is_defined_at(f: CurveFunction, P: ProjectivePoint) -> bool:
    from .local import is_defined_at as _impl

    return _impl(f.curve, P, f)


def value_at(f: CurveFunction, P: ProjectivePoint) -> FieldElement:
    from .local import value_at as _impl

    return _impl(f.curve, P, f)
