"""Formal parameterization of the curve near a rational point.

At the point at infinity the parameter is t = x/y.  With w = 1/y the curve
equation divided by y^3 becomes the fixed-point problem

    w = t^3 + (a2 t^2 - a1 t) w + (a4 t - a3) w^2 + a6 w^3,

whose iteration from w = t^3 gains one correct coefficient per round; then
x = t/w and y = 1/w.

At an affine point (x0, y0) the parameter is t = x - x0 when dW/dy does not
vanish there (y is then Newton-lifted), otherwise t = y - y0 and x is lifted.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .curve import ProjectivePoint, WeierstrassCurve, contains
from .errors import NotOnCurveError
from .function_field import CurveFunction
from .series import INF, LaurentSeries, compose_poly


class LocalParameterization(NamedTuple):
    x: LaurentSeries
    y: LaurentSeries
    parameter: CurveFunction
    #: which coordinate was lifted: "infinity", "y" (t = x - x0) or "x" (t = y - y0)
    kind: str


def _const(F, v):
    return LaurentSeries._raw(F, 0, [v], INF)


def _at_infinity(curve: WeierstrassCurve, N: int) -> LocalParameterization:
    F = curve.field
    a1, a2, a3, a4, a6 = (c.raw for c in curve.a_invariants)
    M = N + 6
    t = LaurentSeries._raw(F, 1, [F.one_raw], INF)
    t2, t3 = t * t, t * t * t
    lin = t2.scale(a2) - t.scale(a1)
    quad = t.scale(a4) - _const(F, a3)
    w = t3
    # w is correct mod t^(4 + k) after k rounds
    for k in range(M):
        work = min(M, 5 + k)
        w = w.truncate(work)
        w2 = w * w
        new = t3 + lin * w + quad * w2 + (w2 * w).scale(a6)
        new = new.truncate(work)
        if work == M and new.c == w.c:
            break
        w = LaurentSeries._raw(F, new.lead, list(new.c), M)
    w = w.truncate(M)
    y = w.inverse()
    x = y.shift(1)
    param = CurveFunction.x(curve) / CurveFunction.y(curve)
    return LocalParameterization(x.truncate(N), y.truncate(N), param, "infinity")


def _newton_lift(F, equation, derivative, start, N: int) -> LaurentSeries:
    """Solve equation(s) = 0 for a power series s with s(0) = start."""
    s = _const(F, start)
    n = 1
    while n < N:
        n = min(2 * n, N)
        s_work = LaurentSeries._raw(F, s.lead, list(s.c), n)
        step = equation(s_work, n) / derivative(s_work, n)
        s = (s_work - step).truncate(n)
    return LaurentSeries._raw(F, s.lead, list(s.c), N)


def _at_affine(curve: WeierstrassCurve, P: ProjectivePoint, N: int) -> LocalParameterization:
    F = curve.field
    a1, a2, a3, a4, a6 = (c.raw for c in curve.a_invariants)
    x0, y0 = P.x.raw, P.y.raw
    fy = F.add(F.add(F.mul(2, y0), F.mul(a1, x0)), a3)

    def W(xs, ys):
        return (ys * ys + (xs * ys).scale(a1) + ys.scale(a3)
                - (xs * xs * xs + (xs * xs).scale(a2) + xs.scale(a4) + _const(F, a6)))

    if fy:
        def xs_at(n):
            return LaurentSeries._raw(F, 0, [x0, F.one_raw], n)

        y = _newton_lift(
            F,
            lambda ys, n: W(xs_at(n), ys),
            lambda ys, n: ys.scale(2) + xs_at(n).scale(a1) + _const(F, a3),
            y0, N,
        )
        x = LaurentSeries._raw(F, 0, [x0, F.one_raw], N)
        param = CurveFunction.x(curve) - F(x0)
        kind = "y"
    else:
        def ys_at(n):
            return LaurentSeries._raw(F, 0, [y0, F.one_raw], n)

        x = _newton_lift(
            F,
            lambda xs, n: W(xs, ys_at(n)),
            lambda xs, n: (ys_at(n).scale(a1) - (xs * xs).scale(3)
                           - xs.scale(F.mul(2, a2)) - _const(F, a4)),
            x0, N,
        )
        y = LaurentSeries._raw(F, 0, [y0, F.one_raw], N)
        param = CurveFunction.y(curve) - F(y0)
        kind = "x"
    return LocalParameterization(x, y, param, kind)


@lru_cache(maxsize=512)
def local_parameterization(curve: WeierstrassCurve, P: ProjectivePoint, N: int) -> LocalParameterization:
    """Expansions of x and y in the local parameter at P, both correct mod t^N."""
    if not contains(curve, P):
        raise NotOnCurveError(f"{P} is not on the curve")
    if N < 1:
        raise ValueError("N must be at least 1")
    if P.is_infinity:
        return _at_infinity(curve, N)
    return _at_affine(curve, P, N)


def substitute(f: CurveFunction, param: LocalParameterization) -> tuple[LaurentSeries, LaurentSeries]:
    """Series of the numerator a + b y and denominator d of f."""
    num = compose_poly(f.a, param.x) + compose_poly(f.b, param.x) * param.y
    den = compose_poly(f.d, param.x)
    return num, den


def local_series(curve: WeierstrassCurve, P: ProjectivePoint, f: CurveFunction, prec: int = 20) -> LaurentSeries:
    """Expansion of f in the local parameter, known at least mod t^prec.

    This is plain substitution of the parameterization into the canonical
    form of f.
    """
    F = curve.field
    if f.is_zero():
        return LaurentSeries.zero(F)
    N = max(prec, 8)
    limit = 4 * (f.numerator_wdeg + f.denominator_wdeg) + 4 * abs(prec) + 64
    while True:
        param = local_parameterization(curve, P, N)
        num, den = substitute(f, param)
        if num.c and den.c:
            s = num / den
            if s.prec >= prec:
                return s.truncate(prec)
        if N > limit:
            raise RuntimeError("local expansion failed to stabilize")
        N *= 2
