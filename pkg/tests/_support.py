"""Test curves, random generators and brute-force oracles.

The oracles here deliberately avoid the library's closed-form formulas:
the group law is rebuilt from line/cubic intersections counted by brute
force, and singular points are found by scanning P^2 with generic partial
derivatives of W.
"""

import random

from weierstrass import CurveFunction, Field, ProjectivePoint, WeierstrassCurve
from weierstrass.curve import all_projective_points, cross, dot
from weierstrass.poly import HomPoly, Poly

# (p, (a1, a2, a3, a4, a6)); p = None means Q
CURVES = {
    "F2": (2, (0, 0, 1, 0, 0)),
    "F3": (3, (1, 0, 0, 0, 1)),
    "F5": (5, (0, 0, 0, 1, 1)),
    "F5b": (5, (0, 0, 0, 4, 0)),
    "F7": (7, (1, 0, 1, 2, 3)),
    "F11": (11, (1, 1, 1, 0, 7)),
    "F11b": (11, (0, 0, 1, 0, 3)),
    "F101": (101, (1, 2, 3, 4, 5)),
    "Q37": (None, (0, 0, 1, -1, 0)),
    "Q32": (None, (0, 0, 0, -1, 0)),
}

SMALL = ["F2", "F3", "F5", "F5b", "F7", "F11", "F11b"]


def curve(name):
    p, a = CURVES[name]
    return WeierstrassCurve(Field(p), *a)


def rand_scalar(F, rng, bound=6):
    if F.p is None:
        return rng.randrange(-bound, bound + 1)
    return rng.randrange(F.p)


def rand_poly(F, rng, deg):
    return Poly(F, [rand_scalar(F, rng) for _ in range(deg + 1)])


def rand_function(E, rng, deg=2, nonzero=True):
    F = E.field
    while True:
        a = rand_poly(F, rng, rng.randint(0, deg))
        b = rand_poly(F, rng, rng.randint(0, deg))
        d = rand_poly(F, rng, rng.randint(0, deg))
        if d and (a or b or not nonzero):
            return CurveFunction(E, a, b, d)


def rand_in_local_ring(E, P, rng, deg=2):
    from weierstrass import valuation

    while True:
        f = rand_function(E, rng, deg)
        if valuation(E, P, f) >= 0:
            return f


def rand_in_maximal_ideal(E, P, rng, deg=2):
    from weierstrass import value_at

    f = rand_in_local_ring(E, P, rng, deg)
    return f - value_at(E, P, f)


def rng(seed=0):
    return random.Random(seed)


# brute-force geometry ------------------------------------------------------

def brute_singular_points(F, coeffs):
    """Points of P^2(F) where W and all three generic partials vanish."""
    a1, a2, a3, a4, a6 = (F.norm(c) for c in coeffs)
    W = HomPoly(F, {
        (0, 2, 1): 1, (1, 1, 1): a1, (0, 1, 2): a3,
        (3, 0, 0): F.neg(1), (2, 0, 1): F.neg(a2), (1, 0, 2): F.neg(a4), (0, 0, 3): F.neg(a6),
    })
    parts = [W.partial(i) for i in range(3)]
    out = []
    for P in all_projective_points(F):
        if not W.eval_raw(P.raw) and all(not g.eval_raw(P.raw) for g in parts):
            out.append(P)
    return out


def _line_points(F, L):
    return [P for P in all_projective_points(F) if not F.norm(dot(L, P.raw))]


def intersection_multiset(E, L):
    """Points of E on the line L (raw triple) with multiplicities, by restricting W
    to L and finding roots of the binary cubic by exhaustive search."""
    F = E.field
    pts = _line_points(F, L)
    A, B = pts[0].raw, pts[1].raw
    W = E.as_hompoly()

    def on_line(s, t):
        return tuple(F.add(F.mul(s, A[i]), F.mul(t, B[i])) for i in range(3))

    # g(s) = W(sA + B) as a polynomial in s; the point A itself is s = infinity
    lin = [Poly(F, [B[i], A[i]]) for i in range(3)]
    g = Poly.zero(F)
    for (i, j, k), c in W.terms.items():
        g = g + (lin[0] ** i * lin[1] ** j * lin[2] ** k).scale(c)
    if not g:
        raise AssertionError("line contained in the curve")
    out = []
    for s in range(F.p):
        m = 0
        h = g
        lin = Poly(F, [F.neg(s), 1])
        while h and h(s) == 0:
            h = h // lin
            m += 1
        out += [ProjectivePoint(*on_line(s, 1), F)] * m
    out += [ProjectivePoint(*A, F)] * (3 - g.degree)
    return out


def oracle_third(E, P, Q):
    if P == Q:
        L = W_gradient(E, P)
    else:
        L = tuple(c.raw for c in cross(P.coords, Q.coords))
    pts = intersection_multiset(E, L)
    assert len(pts) == 3, pts
    pts.remove(P)
    pts.remove(Q)
    return pts[0]


def W_gradient(E, P):
    return E.as_hompoly().gradient_raw(P.raw)


def oracle_add(E, P, Q):
    return oracle_third(E, E.infinity(), oracle_third(E, P, Q))
