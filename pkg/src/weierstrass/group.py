"""The chord-tangent group law on E(K).

``add`` and ``double`` use the closed-form affine formulas; ``chord_third_point``
instead substitutes the line into the curve and reads the third root off the
cubic's x^2 coefficient, so the two routes can be checked against each other.
"""

from __future__ import annotations

from .curve import (
    ProjectivePoint,
    WeierstrassCurve,
    contains,
    line_through,
    tangent_line,
)
from .errors import NotOnCurveError
from .poly import Poly


def _require_on_curve(curve: WeierstrassCurve, *points: ProjectivePoint):
    for P in points:
        if not contains(curve, P):
            raise NotOnCurveError(f"{P} is not on the curve {curve!r}")


def _neg_affine(curve, x, y):
    return ProjectivePoint(x, -(y + curve.a1 * x + curve.a3), 1)


def negate(curve: WeierstrassCurve, P: ProjectivePoint) -> ProjectivePoint:
    _require_on_curve(curve, P)
    if P.is_infinity:
        return P
    return _neg_affine(curve, P.x, P.y)


def double(curve: WeierstrassCurve, P: ProjectivePoint) -> ProjectivePoint:
    _require_on_curve(curve, P)
    if P.is_infinity:
        return P
    a1, a2, a3, a4, _ = curve.a_invariants
    x1, y1 = P.x, P.y
    den = a1 * x1 + 2 * y1 + a3
    if not den:
        # two-torsion: vertical tangent
        return curve.infinity()
    m = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
    x2 = -2 * x1 - a2 + m * m + a1 * m
    y2 = m * (x2 - x1) + y1
    return _neg_affine(curve, x2, y2)


def add(curve: WeierstrassCurve, P: ProjectivePoint, Q: ProjectivePoint) -> ProjectivePoint:
    _require_on_curve(curve, P, Q)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    a1, a2, a3 = curve.a1, curve.a2, curve.a3
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2 and y2 == -(y1 + a1 * x1 + a3):
        return curve.infinity()
    if P == Q:
        return double(curve, P)
    m = (y1 - y2) / (x1 - x2)
    x3 = -x1 - x2 + m * m + a1 * m - a2
    y3 = m * x3 + y1 - m * x1
    return _neg_affine(curve, x3, y3)


def sub(curve: WeierstrassCurve, P: ProjectivePoint, Q: ProjectivePoint) -> ProjectivePoint:
    return add(curve, P, negate(curve, Q))


def scalar_mul(curve: WeierstrassCurve, n: int, P: ProjectivePoint) -> ProjectivePoint:
    _require_on_curve(curve, P)
    if n < 0:
        return negate(curve, scalar_mul(curve, -n, P))
    result = curve.infinity()
    base = P
    while n:
        if n & 1:
            result = add(curve, result, base)
        base = double(curve, base)
        n >>= 1
    return result


def is_two_torsion(curve: WeierstrassCurve, P: ProjectivePoint) -> bool:
    _require_on_curve(curve, P)
    if P.is_infinity:
        return True
    return 2 * P.y == -(curve.a1 * P.x + curve.a3)


def chord_third_point(curve: WeierstrassCurve, P: ProjectivePoint, Q: ProjectivePoint) -> ProjectivePoint:
    """Third intersection R of the line PQ (tangent when P == Q) with E, so P + Q + R = O."""
    _require_on_curve(curve, P, Q)
    F = curve.field
    line = tangent_line(curve, P) if P == Q else line_through(P, Q)
    if line.passes_through_infinity:
        if not line.lam:
            # Z = 0 meets E only at O, with multiplicity three
            return curve.infinity()
        c = -line.nu / line.lam
        finite = [pt for pt in (P, Q) if not pt.is_infinity]
        if len(finite) == 2:
            return curve.infinity()
        # vertical line x = c: y1 + y2 = -(a1 c + a3)
        return ProjectivePoint(c, -(finite[0].y + curve.a1 * c + curve.a3), 1)
    m, b = line.slope, line.intercept
    # substitute y = m x + b into y^2 + a1 xy + a3 y - (x^3 + a2 x^2 + a4 x + a6)
    a1, a2, a3, a4, a6 = (c.raw for c in curve.a_invariants)
    x = Poly.x(F)
    y = Poly(F, [b, m])
    cubic = (y * y + Poly.const(F, a1) * x * y + Poly.const(F, a3) * y
             - (x ** 3 + Poly.const(F, a2) * x * x + Poly.const(F, a4) * x
                + Poly.const(F, a6)))
    # cubic = -(x - x1)(x - x2)(x - x3)
    lead, sub2 = F(cubic.c[3]), F(cubic.c[2])
    root_sum = -sub2 / lead
    x3 = root_sum - P.x - Q.x
    return ProjectivePoint(x3, m * x3 + b, 1)
