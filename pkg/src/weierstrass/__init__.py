"""Exact arithmetic on Weierstrass elliptic curves: the group law, the
function field, local rings, valuations and expansions in a uniformizer."""

from .curve import (
    ProjectiveLine,
    ProjectivePoint,
    WeierstrassCurve,
    contains,
    enumerate_points,
    gradient_at,
    is_colinear,
    line_through,
    make_curve,
    tangent_line,
    weierstrass_eval,
)
from .errors import (
    DomainError,
    ExprSyntaxError,
    FieldMismatchError,
    InsufficientPrecisionError,
    NotAUniformizerError,
    NotOnCurveError,
    PoleError,
    SingularCurveError,
)
from .expansion import metric_abs, psi_expand
from .fields import Field, FieldElement, enumerate_field
from .function_field import CurveFunction, HomogeneousFraction, ff_eq, from_homogeneous
from .group import add, chord_third_point, double, is_two_torsion, negate, scalar_mul
from .local import (
    TangentFrame,
    canonical_uniformizer,
    is_defined_at,
    is_uniformizer,
    tangent_frame,
    theta,
    unit_part,
    valuation,
    value_at,
)
from .parameterization import local_parameterization, local_series
from .series import INF, LaurentSeries, MetricConfig, ls_degree

__version__ = "0.1.0"
