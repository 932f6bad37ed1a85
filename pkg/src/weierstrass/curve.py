"""Weierstrass curves, projective points and lines, incidence and gradients.

The curve is

    W(X, Y, Z) = Y^2 Z + a1 XYZ + a3 YZ^2 - (X^3 + a2 X^2 Z + a4 XZ^2 + a6 Z^3)

with affine form y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .errors import DomainError, FieldMismatchError, SingularCurveError
from .fields import Field, FieldElement
from .poly import HomPoly


class ProjectivePoint:
    """A point of P^2 with a fixed representative.

    Normalized so that Z = 1 when Z != 0, otherwise Y = 1, otherwise X = 1.
    Equality and hashing are therefore structural.
    """

    __slots__ = ("X", "Y", "Z")

    def __init__(self, X, Y, Z, field: Field | None = None):
        if field is None:
            field = next(
                (c.field for c in (X, Y, Z) if isinstance(c, FieldElement)), None
            )
            if field is None:
                raise ValueError("field required for integer coordinates")
        X, Y, Z = field(X), field(Y), field(Z)
        for pivot in (Z, Y, X):
            if pivot:
                s = pivot.inverse()
                X, Y, Z = X * s, Y * s, Z * s
                break
        else:
            raise ValueError("(0, 0, 0) is not a projective point")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        object.__setattr__(self, "Z", Z)

    def __setattr__(self, name, value):
        raise AttributeError("ProjectivePoint is immutable")

    @classmethod
    def affine(cls, x, y, field: Field | None = None) -> ProjectivePoint:
        if field is None:
            field = x.field if isinstance(x, FieldElement) else y.field
        return cls(x, y, 1, field)

    @classmethod
    def infinity(cls, field: Field) -> ProjectivePoint:
        return cls(0, 1, 0, field)

    @property
    def field(self) -> Field:
        return self.X.field

    @property
    def is_infinity(self) -> bool:
        return not self.Z

    @property
    def x(self) -> FieldElement:
        if not self.Z:
            raise ValueError("point at infinity has no affine coordinates")
        return self.X

    @property
    def y(self) -> FieldElement:
        if not self.Z:
            raise ValueError("point at infinity has no affine coordinates")
        return self.Y

    @property
    def coords(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        return (self.X, self.Y, self.Z)

    @property
    def raw(self) -> tuple:
        return (self.X.raw, self.Y.raw, self.Z.raw)

    def normalized(self) -> ProjectivePoint:
        return ProjectivePoint(self.X, self.Y, self.Z)

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.raw)

    def __repr__(self):
        return f"ProjectivePoint({self.X}, {self.Y}, {self.Z})"

    def __str__(self):
        if self.Z:
            return f"({self.X},{self.Y})"
        if self.Y:
            return "O" if not self.X else f"({self.X}:{self.Y}:{self.Z})"
        return f"({self.X}:{self.Y}:{self.Z})"

    def to_json(self):
        if self.Z:
            return [self.X.to_json(), self.Y.to_json()]
        if self.Y and not self.X:
            return "O"
        return [c.to_json() for c in self.coords] + ["projective"]


class ProjectiveLine:
    """The line lam*X + mu*Y + nu*Z = 0, scaled so its first nonzero coefficient is 1."""

    __slots__ = ("lam", "mu", "nu")

    def __init__(self, lam, mu, nu, field: Field | None = None):
        if field is None:
            field = next(c.field for c in (lam, mu, nu) if isinstance(c, FieldElement))
        lam, mu, nu = field(lam), field(mu), field(nu)
        for pivot in (lam, mu, nu):
            if pivot:
                s = pivot.inverse()
                lam, mu, nu = lam * s, mu * s, nu * s
                break
        else:
            raise ValueError("all line coefficients are zero")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)

    def __setattr__(self, name, value):
        raise AttributeError("ProjectiveLine is immutable")

    @property
    def coeffs(self):
        return (self.lam, self.mu, self.nu)

    def contains(self, P: ProjectivePoint) -> bool:
        return not (self.lam * P.X + self.mu * P.Y + self.nu * P.Z)

    @property
    def passes_through_infinity(self) -> bool:
        return not self.mu

    @property
    def slope(self) -> FieldElement:
        """m with y = m x + b; only for lines missing (0, 1, 0)."""
        return -self.lam / self.mu

    @property
    def intercept(self) -> FieldElement:
        return -self.nu / self.mu

    def __eq__(self, other):
        return isinstance(other, ProjectiveLine) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(c.raw for c in self.coeffs))

    def __repr__(self):
        return f"ProjectiveLine({self.lam}, {self.mu}, {self.nu})"


def discriminant(a1, a2, a3, a4, a6):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


class WeierstrassCurve:
    """An elliptic curve in general Weierstrass form over F_p or Q.

    Construction fails with :class:`SingularCurveError` when the
    discriminant vanishes.
    """

    __slots__ = ("field", "a1", "a2", "a3", "a4", "a6", "delta")

    def __init__(self, field: Field, a1=0, a2=0, a3=0, a4=0, a6=0):
        coeffs = [field(c) for c in (a1, a2, a3, a4, a6)]
        delta = discriminant(*coeffs)
        if not delta:
            raise SingularCurveError(
                "singular Weierstrass equation (discriminant is zero)"
            )
        for name, c in zip(("a1", "a2", "a3", "a4", "a6"), coeffs):
            object.__setattr__(self, name, c)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "delta", delta)

    def __setattr__(self, name, value):
        raise AttributeError("WeierstrassCurve is immutable")

    @property
    def a_invariants(self) -> tuple[FieldElement, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __eq__(self, other):
        return (
            isinstance(other, WeierstrassCurve)
            and self.field == other.field
            and self.a_invariants == other.a_invariants
        )

    def __hash__(self):
        return hash((self.field, tuple(c.raw for c in self.a_invariants)))

    def __repr__(self):
        a = ", ".join(str(c) for c in self.a_invariants)
        return f"WeierstrassCurve({self.field}, [{a}])"

    def __str__(self):
        return ",".join(str(c) for c in self.a_invariants)

    def _check(self, P: ProjectivePoint):
        if P.field != self.field:
            raise FieldMismatchError(f"point over {P.field}, curve over {self.field}")

    def infinity(self) -> ProjectivePoint:
        return ProjectivePoint.infinity(self.field)

    def point(self, x, y) -> ProjectivePoint:
        return ProjectivePoint(x, y, 1, self.field)

    def as_hompoly(self) -> HomPoly:
        """W as a sparse homogeneous cubic."""
        F = self.field
        a1, a2, a3, a4, a6 = (c.raw for c in self.a_invariants)
        return HomPoly(F, {
            (0, 2, 1): F.one_raw,
            (1, 1, 1): a1,
            (0, 1, 2): a3,
            (3, 0, 0): F.neg(F.one_raw),
            (2, 0, 1): F.neg(a2),
            (1, 0, 2): F.neg(a4),
            (0, 0, 3): F.neg(a6),
        })

    def eval_xyz(self, X, Y, Z) -> FieldElement:
        a1, a2, a3, a4, a6 = self.a_invariants
        return (Y * Y * Z + a1 * X * Y * Z + a3 * Y * Z * Z
                - (X ** 3 + a2 * X * X * Z + a4 * X * Z * Z + a6 * Z ** 3))

    def gradient_xyz(self, X, Y, Z):
        a1, a2, a3, a4, a6 = self.a_invariants
        dX = a1 * Y * Z - 3 * X * X - 2 * a2 * X * Z - a4 * Z * Z
        dY = 2 * Y * Z + a1 * X * Z + a3 * Z * Z
        dZ = (Y * Y + a1 * X * Y + 2 * a3 * Y * Z - a2 * X * X
              - 2 * a4 * X * Z - 3 * a6 * Z * Z)
        return (dX, dY, dZ)


def make_curve(field: Field, a1, a2, a3, a4, a6) -> WeierstrassCurve:
    return WeierstrassCurve(field, a1, a2, a3, a4, a6)


def weierstrass_eval(curve: WeierstrassCurve, P: ProjectivePoint) -> FieldElement:
    curve._check(P)
    return curve.eval_xyz(*P.coords)


def contains(curve: WeierstrassCurve, P: ProjectivePoint) -> bool:
    return not weierstrass_eval(curve, P)


def gradient_at(curve: WeierstrassCurve, P: ProjectivePoint):
    """(dW/dX, dW/dY, dW/dZ) at the normalized representative of P."""
    curve._check(P)
    return curve.gradient_xyz(*P.coords)


def det3(rows: Sequence[Sequence]):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def cross(u: Sequence, v: Sequence) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence, v: Sequence):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def is_colinear(P1: ProjectivePoint, P2: ProjectivePoint, P3: ProjectivePoint) -> bool:
    return not det3([P1.coords, P2.coords, P3.coords])


def line_through(P1: ProjectivePoint, P2: ProjectivePoint) -> ProjectiveLine:
    if P1 == P2:
        raise ValueError("line through a repeated point is ambiguous; use tangent_line")
    return ProjectiveLine(*cross(P1.coords, P2.coords))


def tangent_line(curve: WeierstrassCurve, P: ProjectivePoint) -> ProjectiveLine:
    """Tangent at an on-curve point; its coefficients are the gradient of W."""
    return ProjectiveLine(*gradient_at(curve, P))


def enumerate_points(curve: WeierstrassCurve) -> list[ProjectivePoint]:
    """All of E(F_p): infinity first, then affine points ordered by (x, y)."""
    F = curve.field
    if F.is_rational:
        raise DomainError("points over Q are not enumerable")
    pts = [curve.infinity()]
    one = F.one
    elems = list(F.elements())
    for x in elems:
        for y in elems:
            if not curve.eval_xyz(x, y, one):
                pts.append(ProjectivePoint(x, y, one))
    return pts


def all_projective_points(field: Field):
    """Every point of P^2(F_p) once, normalized."""
    elems = list(field.elements())
    zero, one = field.zero, field.one
    for x, y in product(elems, elems):
        yield ProjectivePoint(x, y, one)
    for x in elems:
        yield ProjectivePoint(x, one, zero)
    yield ProjectivePoint(one, zero, zero)
