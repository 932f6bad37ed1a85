"""Command-line front end.

Exit status: 0 on success, 1 on a mathematical refusal (singular curve,
point off the curve, pole, ...), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import curve as cc
from . import group
from .errors import DomainError, ExprSyntaxError
from .expansion import psi_expand
from .expr import parse_curve, parse_function, parse_point
from .fields import Field
from .local import canonical_uniformizer, tangent_frame, valuation, value_at
from .series import INF


class UsageError(Exception):
    pass


def _linear_text(vec) -> str:
    parts = []
    for c, name in zip(vec, "XYZ"):
        if not c:
            continue
        F = c.field
        neg = F.p is None and c.raw < 0
        mag = -c.raw if neg else c.raw
        body = name if mag == 1 else f"{mag}*{name}"
        if parts:
            parts.append(f"- {body}" if neg else f"+ {body}")
        else:
            parts.append(f"-{body}" if neg else body)
    text = " ".join(parts)
    return text if len(parts) == 1 and not text.startswith("-") else f"({text})"


def _common(p: argparse.ArgumentParser):
    p.add_argument("--field", required=True, help="Fp:<p> or Q")
    p.add_argument("--curve", required=True, help="a1,a2,a3,a4,a6")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weierstrass",
        description="Exact computations on Weierstrass elliptic curves and their function fields.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("info", help="discriminant and nonsingularity")
    _common(p)
    p = sub.add_parser("points", help="enumerate E(F_p)")
    _common(p)
    p = sub.add_parser("add", help="P + Q")
    _common(p)
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    for verb, help_ in (("neg", "-P"), ("dbl", "2P")):
        p = sub.add_parser(verb, help=help_)
        _common(p)
        p.add_argument("--point", "--p", dest="point", required=True)
    p = sub.add_parser("mul", help="nP")
    _common(p)
    p.add_argument("--point", "--p", dest="point", required=True)
    p.add_argument("--n", type=int, required=True)
    p = sub.add_parser("colinear", help="are three points colinear")
    _common(p)
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--r", required=True)
    p = sub.add_parser("val", help="valuation of a function at a point")
    _common(p)
    p.add_argument("--point", required=True)
    p.add_argument("--fn", required=True)
    p.add_argument("--uniformizer")
    p = sub.add_parser("uniformizer", help="canonical uniformizer at a point")
    _common(p)
    p.add_argument("--point", required=True)
    p = sub.add_parser("expand", help="expansion of a function in a uniformizer")
    _common(p)
    p.add_argument("--point", required=True)
    p.add_argument("--fn", required=True)
    p.add_argument("--uniformizer")
    p.add_argument("--terms", type=int, default=10,
                   help="highest exponent N of the expansion (default 10)")
    p = sub.add_parser("eval", help="value of a function at a point")
    _common(p)
    p.add_argument("--point", required=True)
    p.add_argument("--fn", required=True)
    return parser


def _load(args):
    try:
        field = Field.parse(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    coeffs = parse_curve(args.curve, field)
    return field, coeffs


def execute(args) -> tuple[str, object]:
    """Run a parsed command; returns (text, json-able result)."""
    field, coeffs = _load(args)
    verb = args.verb
    if verb == "info":
        delta = cc.discriminant(*coeffs)
        status = "nonsingular" if delta else "singular"
        text = f"Delta = {delta}\n{status}"
        result = {"delta": delta.to_json(), "nonsingular": bool(delta)}
        if not delta:
            raise _SingularInfo(text, result)
        return text, result

    E = cc.WeierstrassCurve(field, *coeffs)

    def pt(s):
        return parse_point(s, field)

    if verb == "points":
        pts = cc.enumerate_points(E)
        return "\n".join(str(P) for P in pts), [P.to_json() for P in pts]
    if verb == "add":
        R = group.add(E, pt(args.p), pt(args.q))
        return str(R), R.to_json()
    if verb == "neg":
        R = group.negate(E, pt(args.point))
        return str(R), R.to_json()
    if verb == "dbl":
        R = group.double(E, pt(args.point))
        return str(R), R.to_json()
    if verb == "mul":
        R = group.scalar_mul(E, args.n, pt(args.point))
        return str(R), R.to_json()
    if verb == "colinear":
        ok = cc.is_colinear(pt(args.p), pt(args.q), pt(args.r))
        return ("true" if ok else "false"), ok
    P = pt(args.point)
    if not cc.contains(E, P):
        raise DomainError(f"{P} is not on the curve")
    if verb == "uniformizer":
        frame = tangent_frame(E, P)
        text = f"{_linear_text(frame.S)}/{_linear_text(frame.R)}"
        u = canonical_uniformizer(E, P)
        return text, {"homogeneous": text, "affine": str(u)}
    f = parse_function(args.fn, E)
    if verb == "eval":
        v = value_at(E, P, f)
        return str(v), v.to_json()
    u = parse_function(args.uniformizer, E) if getattr(args, "uniformizer", None) else None
    if verb == "val":
        v = valuation(E, P, f, uniformizer=u)
        text = "+inf" if v == INF else str(v)
        return text, ("+inf" if v == INF else v)
    if verb == "expand":
        if u is None:
            u = canonical_uniformizer(E, P)
        s = psi_expand(E, P, u, f, args.terms)
        return str(s), {**s.to_json(), "uniformizer": str(u)}
    raise UsageError(f"unknown verb {verb!r}")


class _SingularInfo(Exception):
    def __init__(self, text, result):
        self.text, self.result = text, result


def _emit(args, text, result, out):
    if args.json:
        doc = {"verb": args.verb, "field": args.field, "curve": args.curve, "result": result}
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(text + "\n")


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, result = execute(args)
    except _SingularInfo as exc:
        _emit(args, exc.text, exc.result, out)
        return 1
    except (ExprSyntaxError, UsageError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except (DomainError, ZeroDivisionError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    _emit(args, text, result, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
