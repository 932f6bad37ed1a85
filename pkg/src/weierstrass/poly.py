"""Univariate polynomials in x and homogeneous polynomials in X, Y, Z.

Both store raw field representatives (see :mod:`weierstrass.fields`).
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .fields import Field, FieldElement


class Poly:
    """Dense univariate polynomial, coefficients low degree first.

    Trailing zeros are trimmed so that the zero polynomial has no
    coefficients and degree ``-inf``.
    """

    __slots__ = ("field", "c")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        c = [field.norm(v.raw if isinstance(v, FieldElement) else v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self.field = field
        self.c = tuple(c)

    @classmethod
    def _raw(cls, field: Field, c: list) -> Poly:
        # c already canonical; trims in place
        while c and not c[-1]:
            c.pop()
        p = cls.__new__(cls)
        p.field = field
        p.c = tuple(c)
        return p

    @classmethod
    def zero(cls, field: Field) -> Poly:
        return cls._raw(field, [])

    @classmethod
    def const(cls, field: Field, v) -> Poly:
        return cls(field, [v])

    @classmethod
    def x(cls, field: Field) -> Poly:
        return cls._raw(field, [field.zero_raw, field.one_raw])

    @property
    def degree(self):
        return len(self.c) - 1 if self.c else -math.inf

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, v) for v in self.c)

    @property
    def lc(self):
        """Leading coefficient (raw); zero for the zero polynomial."""
        return self.c[-1] if self.c else self.field.zero_raw

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return len(self.c) == 1 and self.c[0] == 1

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.c == other.c

    def __hash__(self):
        return hash((self.field, self.c))

    def __repr__(self):
        return f"Poly({self.field}, {list(self.c)})"

    def __str__(self):
        return format_poly(self, "x")

    def __add__(self, other: Poly) -> Poly:
        F = self.field
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = F.add(out[i], v)
        return Poly._raw(F, out)

    def __neg__(self) -> Poly:
        F = self.field
        return Poly._raw(F, [F.neg(v) for v in self.c])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        F = self.field
        a, b = self.c, other.c
        if not a or not b:
            return Poly._raw(F, [])
        p = F.p
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if not u:
                continue
            for j, v in enumerate(b):
                out[i + j] += u * v
        if p is None:
            out = [F.norm(v) for v in out]
        else:
            out = [v % p for v in out]
        return Poly._raw(F, out)

    def scale(self, s) -> Poly:
        """Multiply by the raw scalar ``s``."""
        F = self.field
        return Poly._raw(F, [F.mul(v, s) for v in self.c])

    def __pow__(self, n: int) -> Poly:
        result = Poly.const(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        r = list(self.c)
        db = len(other.c) - 1
        inv_lc = F.inv(other.c[-1])
        q = [F.zero_raw] * max(len(r) - db, 0)
        p = F.p
        b = other.c
        for k in range(len(r) - 1 - db, -1, -1):
            coef = r[k + db] * inv_lc
            if p is not None:
                coef %= p
            q[k] = coef
            if coef:
                if p is None:
                    for j, v in enumerate(b):
                        r[k + j] -= coef * v
                else:
                    for j, v in enumerate(b):
                        r[k + j] = (r[k + j] - coef * v) % p
        return Poly._raw(F, q), Poly._raw(F, r[:db])

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divmod(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def monic(self) -> Poly:
        if not self.c or self.c[-1] == 1:
            return self
        return self.scale(self.field.inv(self.c[-1]))

    def __call__(self, x):
        """Evaluate at a raw value or FieldElement (Horner)."""
        F = self.field
        if isinstance(x, FieldElement):
            return FieldElement(F, self.eval_raw(x.raw))
        return self.eval_raw(x)

    def eval_raw(self, x):
        F = self.field
        acc = F.zero_raw
        for v in reversed(self.c):
            acc = F.add(F.mul(acc, x), v)
        return acc

    def derivative(self) -> Poly:
        F = self.field
        return Poly._raw(F, [F.mul(F.norm(i), v) for i, v in enumerate(self.c) if i])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    # monic remainders keep rational coefficients from growing
    while b.c:
        a, b = b, (a % b).monic()
    return a.monic()


def format_poly(p: Poly, var: str) -> str:
    """Human-readable, re-parseable text, highest degree first."""
    if not p.c:
        return "0"
    F = p.field
    parts = []
    for i in range(len(p.c) - 1, -1, -1):
        v = p.c[i]
        if not v:
            continue
        neg = F.p is None and v < 0
        mag = -v if neg else v
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
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
    return " ".join(parts)


Monomial = tuple  # (i, j, k) exponents of X, Y, Z


class HomPoly:
    """Sparse polynomial in X, Y, Z; ``terms`` maps exponent triples to raw coefficients.

    Homogeneity is not enforced by the container; :attr:`degree` returns
    ``None`` when the terms have mixed total degree.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: dict | None = None):
        self.field = field
        self.terms = {m: v for m, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, field: Field, v) -> HomPoly:
        return cls(field, {(0, 0, 0): field.norm(v)})

    @classmethod
    def var(cls, field: Field, index: int) -> HomPoly:
        m = [0, 0, 0]
        m[index] = 1
        return cls(field, {tuple(m): field.one_raw})

    @classmethod
    def linear(cls, field: Field, vec: Sequence) -> HomPoly:
        """``vec[0] X + vec[1] Y + vec[2] Z`` from raw coefficients."""
        return cls(field, {(1, 0, 0): vec[0], (0, 1, 0): vec[1], (0, 0, 1): vec[2]})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        degs = {sum(m) for m in self.terms}
        if not degs:
            return -math.inf
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.degree is not None

    def __eq__(self, other):
        return isinstance(other, HomPoly) and self.field == other.field and self.terms == other.terms

    def __repr__(self):
        return f"HomPoly({self.field}, {self.terms})"

    def __str__(self):
        if not self.terms:
            return "0"
        F = self.field
        parts = []
        for m in sorted(self.terms, reverse=True):
            v = self.terms[m]
            neg = F.p is None and v < 0
            mag = -v if neg else v
            vars_ = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip("XYZ", m) if e
            )
            body = str(mag) if not vars_ else (vars_ if mag == 1 else f"{mag}*{vars_}")
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __add__(self, other: HomPoly) -> HomPoly:
        F = self.field
        out = dict(self.terms)
        for m, v in other.terms.items():
            out[m] = F.add(out.get(m, F.zero_raw), v)
        return HomPoly(F, out)

    def __neg__(self) -> HomPoly:
        F = self.field
        return HomPoly(F, {m: F.neg(v) for m, v in self.terms.items()})

    def __sub__(self, other: HomPoly) -> HomPoly:
        return self + (-other)

    def __mul__(self, other: HomPoly) -> HomPoly:
        F = self.field
        out: dict = {}
        for m1, v1 in self.terms.items():
            for m2, v2 in other.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                out[m] = F.add(out.get(m, F.zero_raw), F.mul(v1, v2))
        return HomPoly(F, out)

    def scale(self, s) -> HomPoly:
        F = self.field
        return HomPoly(F, {m: F.mul(v, s) for m, v in self.terms.items()})

    def __pow__(self, n: int) -> HomPoly:
        result = HomPoly.const(self.field, 1)
        for _ in range(n):
            result = result * self
        return result

    def eval_raw(self, pt: Sequence):
        F = self.field
        acc = F.zero_raw
        for (i, j, k), v in self.terms.items():
            t = F.mul(v, F.mul(F.pow(pt[0], i), F.mul(F.pow(pt[1], j), F.pow(pt[2], k))))
            acc = F.add(acc, t)
        return acc

    def partial(self, index: int) -> HomPoly:
        F = self.field
        out: dict = {}
        for m, v in self.terms.items():
            e = m[index]
            if e:
                m2 = list(m)
                m2[index] -= 1
                m2 = tuple(m2)
                out[m2] = F.add(out.get(m2, F.zero_raw), F.mul(F.norm(e), v))
        return HomPoly(F, out)

    def gradient_raw(self, pt: Sequence) -> tuple:
        return tuple(self.partial(i).eval_raw(pt) for i in range(3))

    def dehomogenize(self) -> dict[int, Poly]:
        """Set Z = 1; returns ``{j: coefficient of y^j as a Poly in x}``."""
        F = self.field
        by_j: dict[int, list] = {}
        for (i, j, _k), v in self.terms.items():
            row = by_j.setdefault(j, [])
            if len(row) <= i:
                row.extend([F.zero_raw] * (i + 1 - len(row)))
            row[i] = F.add(row[i], v)
        return {j: Poly._raw(F, row) for j, row in by_j.items()}
