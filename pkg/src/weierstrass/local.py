"""Local rings at rational points: tangent frames, the functional theta,
uniformizers, valuations and evaluation.

Membership in the local ring and its maximal ideal is never materialized;
it is read off the valuation (v >= 0 and v >= 1 respectively).
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import ProjectivePoint, WeierstrassCurve, contains, cross, det3, dot, gradient_at
from .errors import DomainError, NotAUniformizerError, NotOnCurveError, PoleError
from .fields import FieldElement
from .function_field import CurveFunction, HomogeneousFraction, from_homogeneous
from .parameterization import local_parameterization, local_series, substitute
from .poly import HomPoly
from .series import INF, LaurentSeries, ls_degree
from .errors import InsufficientPrecisionError

Triple = tuple[FieldElement, FieldElement, FieldElement]


def _require_on_curve(curve, P):
    if not contains(curve, P):
        raise NotOnCurveError(f"{P} is not on the curve")


@dataclass(frozen=True)
class TangentFrame:
    """Auxiliary vectors at P: R.P != 0, T orthogonal to R and grad W, S.P = 0, S.T != 0."""

    P: ProjectivePoint
    R: Triple
    grad: Triple
    T: Triple
    S: Triple

    def check(self) -> None:
        P = self.P.coords
        assert dot(self.R, P), "R.P == 0"
        assert not dot(self.T, self.R), "T.R != 0"
        assert not dot(self.T, self.grad), "T.grad != 0"
        assert any(self.T), "T == 0"
        assert not dot(self.S, P), "S.P != 0"
        assert dot(self.S, self.T), "S.T == 0"


def _basis(F, i):
    v = [F.zero, F.zero, F.zero]
    v[i] = F.one
    return tuple(v)


def tangent_frame(curve: WeierstrassCurve, P: ProjectivePoint) -> TangentFrame:
    _require_on_curve(curve, P)
    F = curve.field
    coords = P.coords
    R = next(_basis(F, i) for i in range(3) if coords[i])
    grad = gradient_at(curve, P)
    T = cross(R, grad)
    S = next((_basis(F, i) for i in range(3) if not coords[i] and T[i]), None)
    if S is None:
        # no coordinate vector works; S = P x e_i is orthogonal to P
        S = next(
            cross(coords, _basis(F, i)) for i in range(3)
            if det3([coords, _basis(F, i), T])
        )
    return TangentFrame(P, R, grad, T, S)


def _linear_form(vec: Triple) -> HomPoly:
    return HomPoly.linear(vec[0].field, [c.raw for c in vec])


def canonical_uniformizer_fraction(curve: WeierstrassCurve, P: ProjectivePoint) -> HomogeneousFraction:
    fr = tangent_frame(curve, P)
    return HomogeneousFraction(_linear_form(fr.S), _linear_form(fr.R))


def canonical_uniformizer(curve: WeierstrassCurve, P: ProjectivePoint) -> CurveFunction:
    """The function S.(X,Y,Z) / R.(X,Y,Z) built from the tangent frame at P."""
    return from_homogeneous(canonical_uniformizer_fraction(curve, P), curve)


def _theta_fraction(frame: TangentFrame, hf: HomogeneousFraction) -> FieldElement:
    F = hf.field
    pt = frame.P.raw
    G = hf.den.eval_raw(pt)
    if not G:
        raise DomainError("denominator vanishes at the point")
    Fv = hf.num.eval_raw(pt)
    gF = hf.num.gradient_raw(pt)
    gG = hf.den.gradient_raw(pt)
    T = [c.raw for c in frame.T]
    acc = F.zero_raw
    for i in range(3):
        term = F.sub(F.mul(G, gF[i]), F.mul(Fv, gG[i]))
        acc = F.add(acc, F.mul(term, T[i]))
    return F(F.div(acc, F.mul(G, G)))


def _theta_series(curve: WeierstrassCurve, frame: TangentFrame, f: CurveFunction) -> FieldElement:
    # Along the formal curve gamma(t) through P, d/dt f(gamma(t)) at 0 equals
    # grad(f) . gamma'(0); gamma'(0) = alpha P + beta T and grad(f) . P = 0.
    P = frame.P
    F = curve.field
    s = local_series(curve, P, f, 2)
    if s.c and s.lead < 0:
        raise PoleError(f"function has a pole at {P}")
    c1 = s.coeff(1)
    param = local_parameterization(curve, P, 2)
    if P.is_infinity:
        tangent = (F.one, F.zero, F.zero)
    else:
        tangent = (param.x.coeff(1), param.y.coeff(1), F.zero)
    alpha = dot(tangent, frame.R) / dot(P.coords, frame.R)
    i = next(k for k in range(3) if frame.T[k])
    beta = (tangent[i] - alpha * P.coords[i]) / frame.T[i]
    return c1 / beta


def theta(curve: WeierstrassCurve, P: ProjectivePoint, f) -> FieldElement:
    """T . grad_P(f) for f in the local ring at P.

    ``f`` may be a :class:`HomogeneousFraction` whose denominator does not
    vanish at P (quotient rule, literally), or a :class:`CurveFunction`.
    For the latter the quotient rule is used on its Z-cleared homogeneous
    form when that form's denominator is nonzero at P, and otherwise the
    derivative along the local parameterization.
    """
    frame = tangent_frame(curve, P)
    if isinstance(f, HomogeneousFraction):
        return _theta_fraction(frame, f)
    hf = f.to_homogeneous()
    if hf.den.eval_raw(P.raw):
        return _theta_fraction(frame, hf)
    return _theta_series(curve, frame, f)


def _as_function(curve, u) -> CurveFunction:
    if isinstance(u, HomogeneousFraction):
        return from_homogeneous(u, curve)
    return u


def is_uniformizer(curve: WeierstrassCurve, P: ProjectivePoint, u) -> bool:
    """True iff u (which must vanish at P) lies in M_P but not M_P^2."""
    try:
        value = value_at(curve, P, _as_function(curve, u))
    except PoleError:
        raise NotAUniformizerError(f"{u} has a pole at {P}") from None
    if value:
        raise NotAUniformizerError(f"{u} does not vanish at {P}")
    return bool(theta(curve, P, u))


# valuations and evaluation ------------------------------------------------

def _leading_terms(curve: WeierstrassCurve, P: ProjectivePoint, f: CurveFunction):
    """Orders and leading coefficients of the numerator and denominator series."""
    cap = 2 * (f.numerator_wdeg + f.denominator_wdeg) + 4
    N = 8
    while True:
        num, den = substitute(f, local_parameterization(curve, P, N))
        try:
            return ls_degree(num), num.c[0], ls_degree(den), den.c[0]
        except InsufficientPrecisionError:
            if N >= cap:
                raise RuntimeError(
                    "nonzero function expanded to zero at the precision cap"
                ) from None
            N *= 2


def valuation(curve: WeierstrassCurve, P: ProjectivePoint, f: CurveFunction, uniformizer=None):
    """Order of f at P (``inf`` for the zero function).

    Without ``uniformizer`` this is the order of the local expansion.  With
    one, the exponent k making f / u^k a unit is found by multiplying or
    dividing by u and testing defined-ness and vanishing.
    """
    _require_on_curve(curve, P)
    f = _as_function(curve, f)
    if f.is_zero():
        return INF
    if uniformizer is None:
        if P.is_infinity:
            return int(_order_at_infinity(f))
        vn, _, vd, _ = _leading_terms(curve, P, f)
        return vn - vd
    u = _as_function(curve, uniformizer)
    if not is_uniformizer(curve, P, u):
        raise NotAUniformizerError(f"{u} is not a uniformizer at {P}")
    k, g = 0, f
    while not is_defined_at(curve, P, g):
        g, k = g * u, k - 1
    inv_u = u.inverse()
    while not value_at(curve, P, g):
        g, k = g * inv_u, k + 1
    return k


def _order_at_infinity(f: CurveFunction):
    # x and y have leading terms t^-2 and t^-3 (coefficient 1) at O, and the
    # weights 2 deg a, 2 deg b + 3 have different parity, so nothing cancels.
    return f.denominator_wdeg - f.numerator_wdeg


def _direct_value(f: CurveFunction, P: ProjectivePoint):
    """Value of f at P when it can be read off the canonical form, else None.

    At an affine point this needs d(x0) != 0; at infinity it always works.
    """
    if P.is_infinity:
        v = _order_at_infinity(f)
        if v < 0:
            return None
        if v > 0 or f.is_zero():
            return P.field.zero
        return P.field(P.field.div(f.a.lc, f.d.lc))
    d = f.d(P.x)
    if not d:
        return None
    return (f.a(P.x) + f.b(P.x) * P.y) / d


def is_defined_at(curve: WeierstrassCurve, P: ProjectivePoint, f: CurveFunction) -> bool:
    _require_on_curve(curve, P)
    if _direct_value(f, P) is not None:
        return True
    return valuation(curve, P, f) >= 0


def value_at(curve: WeierstrassCurve, P: ProjectivePoint, f: CurveFunction) -> FieldElement:
    _require_on_curve(curve, P)
    f = _as_function(curve, f)
    direct = _direct_value(f, P)
    if direct is not None:
        return direct
    F = curve.field
    if f.is_zero():
        return F.zero
    vn, cn, vd, cd = _leading_terms(curve, P, f)
    if vn < vd:
        raise PoleError(f"{f} has a pole of order {vd - vn} at {P}")
    if vn > vd:
        return F.zero
    return F(F.div(cn, cd))


def unit_part(curve: WeierstrassCurve, P: ProjectivePoint, f: CurveFunction, u: CurveFunction, N: int) -> LaurentSeries:
    """Expansion of g = u^(-v(f)) f in u, coefficients of u^0 .. u^(N-1)."""
    from .expansion import psi_expand

    if f.is_zero():
        raise ValueError("the zero function has no unit part")
    v = valuation(curve, P, f)
    return psi_expand(curve, P, u, f * u ** (-v), N - 1)
