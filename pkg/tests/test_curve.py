import itertools

import pytest

from _support import SMALL, brute_singular_points, curve
from weierstrass import (
    Field,
    ProjectiveLine,
    ProjectivePoint,
    SingularCurveError,
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
from weierstrass.curve import discriminant, dot

F5 = Field(5)
E5 = WeierstrassCurve(F5, 0, 0, 0, 1, 1)


def pt(x, y, z=1, F=F5):
    return ProjectivePoint(x, y, z, F)


O5 = pt(0, 1, 0)


def test_discriminant_examples():
    assert E5.delta == 4
    assert make_curve(Field(2), 0, 0, 1, 0, 0).delta == 1
    with pytest.raises(SingularCurveError):
        make_curve(F5, 0, 0, 0, 0, 0)


def test_discriminant_short_form_over_q():
    # y^2 = x^3 + a x + b has Delta = -16(4a^3 + 27b^2)
    Q = Field.rationals()
    for a, b in [(1, 1), (-1, 0), (2, -3), (0, 5)]:
        assert discriminant(*(Q(v) for v in (0, 0, 0, a, b))) == -16 * (4 * a**3 + 27 * b**2)


def test_eval_examples():
    assert weierstrass_eval(E5, O5) == 0
    assert weierstrass_eval(E5, pt(0, 1)) == 0
    assert weierstrass_eval(E5, pt(1, 1)) == 3


def test_contains_examples():
    assert contains(E5, pt(2, 1))
    assert not contains(E5, pt(1, 1))
    for name in SMALL:
        E = curve(name)
        assert contains(E, E.infinity())


def test_gradient_examples():
    for name in SMALL + ["F101", "Q37"]:
        E = curve(name)
        assert gradient_at(E, E.infinity()) == (0, 0, 1)
    # dW/dZ at (0,1,1) is Y^2 - 2 a4 X Z - 3 a6 Z^2 = 1 - 3 = 3 (Euler's identity forces it)
    assert gradient_at(E5, pt(0, 1)) == (4, 2, 3)


def test_gradient_matches_generic_partials():
    for name in SMALL:
        E = curve(name)
        W = E.as_hompoly()
        for P in enumerate_points(E):
            generic = tuple(E.field(v) for v in W.gradient_raw(P.raw))
            assert gradient_at(E, P) == generic


def test_colinear_examples():
    for c, y1, y2 in itertools.product(range(5), repeat=3):
        assert is_colinear(O5, pt(c, y1), pt(c, y2))
    assert is_colinear(pt(0, 1), pt(2, 1), pt(3, 1))
    assert not is_colinear(pt(0, 1), pt(2, 1), pt(3, 4))


def test_line_through_examples():
    assert line_through(pt(0, 1), pt(2, 1)) == ProjectiveLine(0, 1, -1, F5)
    for c, y in [(0, 0), (3, 2), (4, 4)]:
        assert line_through(O5, pt(c, y)) == ProjectiveLine(1, 0, -c, F5)
    with pytest.raises(ValueError):
        line_through(pt(0, 1), pt(0, 1))


def test_tangent_line_examples():
    L = tangent_line(E5, O5)
    assert L == ProjectiveLine(0, 0, 1, F5)
    T = tangent_line(E5, pt(0, 1))
    assert T == ProjectiveLine(4, 2, 3, F5)
    assert T.slope == 3
    for P in enumerate_points(E5):
        assert tangent_line(E5, P).contains(P)


def test_enumerate_examples():
    assert len(enumerate_points(E5)) == 9
    E2 = curve("F2")
    assert enumerate_points(E2) == [pt(0, 1, 0, E2.field), pt(0, 0, 1, E2.field), pt(0, 1, 1, E2.field)]
    for name in SMALL:
        E = curve(name)
        pts = enumerate_points(E)
        assert pts[0].is_infinity
        assert [P.raw[:2] for P in pts[1:]] == sorted(P.raw[:2] for P in pts[1:])
        assert all(contains(E, P) for P in pts)
    with pytest.raises(ValueError):
        enumerate_points(curve("Q37"))


def test_enumerate_matches_exhaustive_scan():
    for name in SMALL:
        E = curve(name)
        F = E.field
        scan = [pt(x, y, 1, F) for x in range(F.p) for y in range(F.p) if contains(E, pt(x, y, 1, F))]
        assert set(enumerate_points(E)) == set(scan) | {E.infinity()}


def test_euler_identity_and_nonzero_gradient():
    for name in SMALL + ["F101"]:
        E = curve(name)
        for P in enumerate_points(E):
            g = gradient_at(E, P)
            assert dot(P.coords, g) == 0
            assert any(g)


def test_colinear_invariance():
    pts = enumerate_points(E5)
    for P, Q, R in itertools.combinations(pts, 3):
        base = is_colinear(P, Q, R)
        for perm in itertools.permutations((P, Q, R)):
            assert is_colinear(*perm) == base
        for s, t, u in [(2, 3, 4), (4, 1, 2)]:
            P2 = ProjectivePoint(*(c * s for c in P.coords))
            Q2 = ProjectivePoint(*(c * t for c in Q.coords))
            R2 = ProjectivePoint(*(c * u for c in R.coords))
            assert is_colinear(P2, Q2, R2) == base


def test_normalization():
    P = ProjectivePoint(2, 4, 2, F5)
    assert P.raw == (1, 2, 1)
    assert ProjectivePoint(*P.coords) == P
    assert ProjectivePoint(0, 3, 0, F5).raw == (0, 1, 0)
    assert ProjectivePoint(3, 0, 0, F5).raw == (1, 0, 0)
    with pytest.raises(ValueError):
        ProjectivePoint(0, 0, 0, F5)
    for P in enumerate_points(E5):
        Q = ProjectivePoint(*(c * 3 for c in P.coords))
        assert Q == P and contains(E5, Q)


@pytest.mark.parametrize("p", [2, 3])
def test_nonsingularity_equivalence_small(p):
    F = Field(p)
    for coeffs in itertools.product(range(p), repeat=5):
        sing = brute_singular_points(F, coeffs)
        delta = discriminant(*(F(c) for c in coeffs))
        if delta:
            assert sing == []
        else:
            # a singular cubic over a perfect field has exactly one singular point, and it is rational
            assert len(sing) == 1
            with pytest.raises(SingularCurveError):
                WeierstrassCurve(F, *coeffs)
