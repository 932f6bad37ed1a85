"""Expansion of functions in a uniformizer, and the associated metric."""

from __future__ import annotations

from fractions import Fraction

from .curve import ProjectivePoint, WeierstrassCurve
from .errors import NotAUniformizerError
from .function_field import CurveFunction, HomogeneousFraction, from_homogeneous
from .local import is_uniformizer, valuation, value_at
from .series import INF, LaurentSeries, MetricConfig, ls_degree


def psi_expand(curve: WeierstrassCurve, P: ProjectivePoint, u: CurveFunction, f: CurveFunction, N: int) -> LaurentSeries:
    """Coefficients f_j, j = v(f) .. N, of f = sum f_j u^j at P.

    Built one coefficient at a time: with a = v(f), h = u^(-a) f is a unit,
    f_a = h(P), and the next quotient is (h - f_a) / u.  When a quotient
    becomes exactly zero the expansion is finite and the result is exact.
    """
    if isinstance(u, HomogeneousFraction):
        u = from_homogeneous(u, curve)
    if isinstance(f, HomogeneousFraction):
        f = from_homogeneous(f, curve)
    F = curve.field
    if not is_uniformizer(curve, P, u):
        raise NotAUniformizerError(f"{u} is not a uniformizer at {P}")
    if f.is_zero():
        return LaurentSeries.zero(F)
    a = valuation(curve, P, f)
    if N < a:
        return LaurentSeries.big_o(F, N + 1)
    inv_u = u.inverse()
    h = f * inv_u ** a if a >= 0 else f * u ** (-a)
    coeffs = []
    for _ in range(a, N + 1):
        c = value_at(curve, P, h)
        coeffs.append(c)
        h = (h - c) * inv_u
        if h.is_zero():
            return LaurentSeries(F, a, coeffs)
    return LaurentSeries(F, a, coeffs, prec=N + 1)


def metric_abs(arg, cfg: MetricConfig = MetricConfig(), *, curve: WeierstrassCurve | None = None,
               P: ProjectivePoint | None = None) -> Fraction:
    """c^v for a function at P (v its valuation) or for a series (v its degree)."""
    if isinstance(arg, LaurentSeries):
        v = ls_degree(arg)
    else:
        if curve is None or P is None:
            raise ValueError("curve and point are required for a function")
        v = valuation(curve, P, arg)
    return cfg.power(v) if v != INF else Fraction(0)
