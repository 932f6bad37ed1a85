"""Recursive-descent parser for function and point expressions.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | VAR | '(' expr ')'

Variables are ``x, y`` (affine mode) or ``X, Y, Z`` (homogeneous mode);
the two cannot be mixed.  Exponents are non-negative integer literals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .curve import ProjectivePoint, WeierstrassCurve
from .errors import ExprSyntaxError
from .fields import Field
from .function_field import CurveFunction, HomogeneousFraction, from_homogeneous
from .poly import HomPoly

AFFINE_VARS = frozenset("xy")
PROJECTIVE_VARS = frozenset("XYZ")


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Var, Neg, BinOp, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(text: str):
    tokens = []
    for m in _TOKEN.finditer(text):
        num, name, sym = m.groups()
        pos = m.start(m.lastindex) if m.lastindex else m.start()
        if num is not None:
            tokens.append(("num", int(num), pos))
        elif name is not None:
            tokens.append(("var", name, pos))
        elif sym is not None:
            if sym.isspace():
                continue
            if sym not in "+-*/^()":
                raise ExprSyntaxError(f"unexpected character {sym!r}", pos)
            tokens.append((sym, sym, pos))
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.names: set[str] = set()

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ExprSyntaxError(f"expected {kind!r}, found {found}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Expr:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.peek()[0] == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "num":
                raise ExprSyntaxError("exponent must be a non-negative integer literal", tok[2])
            self.take()
            return Pow(base, tok[1])
        return base

    def atom(self) -> Expr:
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            return Num(tok[1])
        if tok[0] == "var":
            self.take()
            name = tok[1]
            if name not in AFFINE_VARS | PROJECTIVE_VARS:
                raise ExprSyntaxError(f"unknown variable {name!r}", tok[2])
            self.names.add(name)
            return Var(name)
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        found = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ExprSyntaxError(f"unexpected {found}", tok[2])


def parse_expr(text: str, mode: str | None = None) -> tuple[Expr, str]:
    """Parse ``text``; returns the tree and its mode ("affine" or "homogeneous").

    ``mode=None`` infers the mode from the variables used.
    """
    p = _Parser(text)
    tree = p.parse()
    lower = p.names & AFFINE_VARS
    upper = p.names & PROJECTIVE_VARS
    if lower and upper:
        raise ExprSyntaxError("cannot mix affine (x, y) and projective (X, Y, Z) variables")
    inferred = "homogeneous" if upper else "affine"
    if mode is None:
        mode = inferred
    elif mode == "affine" and upper:
        raise ExprSyntaxError("projective variables in an affine expression")
    elif mode == "homogeneous" and lower:
        raise ExprSyntaxError("affine variables in a homogeneous expression")
    elif mode not in ("affine", "homogeneous"):
        raise ValueError(f"unknown mode {mode!r}")
    return tree, mode


def eval_affine(tree: Expr, curve: WeierstrassCurve) -> CurveFunction:
    if isinstance(tree, Num):
        return CurveFunction.const(curve, tree.value)
    if isinstance(tree, Var):
        return CurveFunction.x(curve) if tree.name == "x" else CurveFunction.y(curve)
    if isinstance(tree, Neg):
        return -eval_affine(tree.operand, curve)
    if isinstance(tree, Pow):
        return eval_affine(tree.base, curve) ** tree.exponent
    left, right = eval_affine(tree.left, curve), eval_affine(tree.right, curve)
    if tree.op == "+":
        return left + right
    if tree.op == "-":
        return left - right
    if tree.op == "*":
        return left * right
    return left / right


def _eval_hom(tree: Expr, field: Field) -> tuple[HomPoly, HomPoly]:
    if isinstance(tree, Num):
        return HomPoly.const(field, tree.value), HomPoly.const(field, 1)
    if isinstance(tree, Var):
        return HomPoly.var(field, "XYZ".index(tree.name)), HomPoly.const(field, 1)
    if isinstance(tree, Neg):
        n, d = _eval_hom(tree.operand, field)
        return -n, d
    if isinstance(tree, Pow):
        n, d = _eval_hom(tree.base, field)
        return n ** tree.exponent, d ** tree.exponent
    ln, ld = _eval_hom(tree.left, field)
    rn, rd = _eval_hom(tree.right, field)
    if tree.op in "+-":
        if not ln.is_zero() and not rn.is_zero() and _weight(ln, ld) != _weight(rn, rd):
            raise ExprSyntaxError("inhomogeneous sum in projective expression")
        rn = rn if tree.op == "+" else -rn
        return ln * rd + rn * ld, ld * rd
    if tree.op == "*":
        return ln * rn, ld * rd
    if rn.is_zero():
        raise ZeroDivisionError("division by zero in expression")
    return ln * rd, ld * rn


def _weight(n: HomPoly, d: HomPoly):
    if n.degree is None or d.degree is None:
        raise ExprSyntaxError("inhomogeneous projective expression")
    return n.degree - d.degree


def eval_homogeneous(tree: Expr, field: Field) -> HomogeneousFraction:
    num, den = _eval_hom(tree, field)
    if num.degree is None or den.degree is None:
        raise ExprSyntaxError("inhomogeneous projective expression")
    if not num.is_zero() and num.degree != den.degree:
        raise ExprSyntaxError("projective expression must have degree 0 (equal-degree numerator and denominator)")
    return HomogeneousFraction(num, den)


def parse_function(text: str, curve: WeierstrassCurve, mode: str | None = None) -> CurveFunction:
    tree, mode = parse_expr(text, mode)
    if mode == "homogeneous":
        return from_homogeneous(eval_homogeneous(tree, curve.field), curve)
    return eval_affine(tree, curve)


def parse_homogeneous(text: str, field: Field) -> HomogeneousFraction:
    tree, _ = parse_expr(text, "homogeneous")
    return eval_homogeneous(tree, field)


_POINT_AFFINE = re.compile(r"^\(\s*([^,:()]+?)\s*,\s*([^,:()]+?)\s*\)$")
_POINT_PROJ = re.compile(r"^\(\s*([^,:()]+?)\s*:\s*([^,:()]+?)\s*:\s*([^,:()]+?)\s*\)$")


def parse_point(text: str, field: Field) -> ProjectivePoint:
    """``O``, ``(x,y)`` or ``(X:Y:Z)`` with integer or ``a/b`` literals."""
    s = text.strip()
    if s in ("O", "o"):
        return ProjectivePoint.infinity(field)
    m = _POINT_AFFINE.match(s)
    try:
        if m:
            return ProjectivePoint(field.literal(m[1]), field.literal(m[2]), field.one)
        m = _POINT_PROJ.match(s)
        if m:
            return ProjectivePoint(*(field.literal(g) for g in m.groups()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ExprSyntaxError(f"bad point {text!r}: {exc}") from None
    raise ExprSyntaxError(f"bad point {text!r}; expected O, (x,y) or (X:Y:Z)")


def parse_curve(text: str, field: Field) -> tuple:
    parts = text.split(",")
    if len(parts) != 5:
        raise ExprSyntaxError(f"curve needs five coefficients a1,a2,a3,a4,a6; got {text!r}")
    try:
        return tuple(field.literal(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ExprSyntaxError(f"bad curve coefficient: {exc}") from None
