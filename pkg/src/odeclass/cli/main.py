"""Command-line entry point: ``odeclass <subcommand> ...``.

Exit status: 0 when a verdict was produced (including Inconclusive, Unknown
and NoneAtBounds), 2 on malformed input, 3 when a precondition fails.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Any, Sequence

from .. import __version__
from ..classify import (
    DegenerateCurve,
    RiccatiCoeffs,
    SingularMatrix,
    certify_general,
    classify_abel,
    classify_autonomous,
    iso_over_kbar,
    j_invariant,
    mobius_riccati,
)
from ..classify.general import HYPOTHESES
from ..classify.weierstrass import discriminant_term
from ..curve import BiDiffPoly, PreconditionError, branch_expand, branch_residual_vanishes, translate
from ..exactalg import Poly, RatFn, rational_roots
from ..ratcalc import Antiderivative, Commensurability, DerivationMode, has_antiderivative, residue_profile
from ..series import (
    SAFETY_MARGIN,
    TruncationTooSmall,
    find_algebraic_relation,
    relation_columns,
    solve_series_curve,
)
from .certificate import dumps, make_document
from .convert import InputError, autonomous_h, coefficient, parse_rational, to_curve, to_ratfn
from .parser import ParseError, parse, to_text

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3


class Result:
    def __init__(self, verdict: str, inputs: dict, evidence: dict, hypotheses: dict | None = None):
        self.verdict = verdict
        self.inputs = inputs
        self.evidence = evidence
        self.hypotheses = hypotheses or {}


# -- helpers -----------------------------------------------------------------


def _split(text: str) -> list[str]:
    parts = [p.strip() for p in text.split(",")]
    if not all(parts):
        raise InputError(f"empty item in list {text!r}")
    return parts


def _rationals(text: str, count: int | None = None) -> list[Fraction]:
    vals = [parse_rational(p) for p in _split(text)]
    if count is not None and len(vals) != count:
        raise InputError(f"expected {count} comma-separated rationals, got {len(vals)}")
    return vals


def _canonical(expr_text: str) -> str:
    return to_text(parse(expr_text))


def _residue_list(res: dict) -> list[dict]:
    return [{"pole": p, "residue": r} for p, r in sorted(res.items())]


def _commensurability(c: Commensurability | None) -> dict | None:
    if c is None:
        return None
    return {
        "decision": c.decision.value,
        "reason": c.reason,
        "factors": [{"factor": f, "shape": s.value} for f, s in c.factors],
        "unfactored": c.unfactored,
        "witness": c.witness,
    }


def _antiderivative(a: Antiderivative) -> dict:
    return {
        "exists": a.exists,
        "mode": a.mode.value,
        "witness": a.witness,
        "rt_resultant": a.rt_resultant,
        "residues": _residue_list(a.rational_residues),
        "reason": a.reason,
    }


def _mode_of(values: Sequence[Any]) -> DerivationMode:
    if any(isinstance(v, RatFn) and not v.is_constant() for v in values):
        return DerivationMode.QX
    return DerivationMode.CONST


def _qx_or_const(texts: Sequence[str]) -> tuple[list[Any], DerivationMode]:
    vals = [to_ratfn(t, "x") for t in texts]
    mode = _mode_of(vals)
    if mode is DerivationMode.CONST:
        return [v.constant_value() for v in vals], mode
    return vals, mode


# -- subcommands -------------------------------------------------------------


def cmd_classify_auto(args) -> Result:
    h = autonomous_h(args.expr)
    if not h:
        raise InputError("h = 0: the equation y' = 0 carries no information")
    v = classify_autonomous(h)
    p = v.profile
    evidence = {
        "w": v.w,
        "hermite_remainder": p.remainder,
        "rt_resultant": p.rt_resultant,
        "residues": _residue_list(p.rational_residues),
        "simple_poles_only": p.simple_poles_only,
        "commensurability": _commensurability(p.commensurable),
        "witness": v.witness,
        "failures": list(v.failures),
    }
    return Result(v.tag.name.title(), {"expression": _canonical(args.expr), "h": h}, evidence)


def _general_evidence(r) -> dict:
    return {
        "lambda2": r.lambda2,
        "lambda3": r.lambda3,
        "lambda2_antiderivative": _antiderivative(r.evidence2),
        "lambda3_antiderivative": _antiderivative(r.evidence3),
        "reason": r.reason,
    }


def cmd_certify_general(args) -> Result:
    f = to_curve(args.expr)
    inputs: dict = {"expression": _canonical(args.expr), "curve": f}
    if args.shift:
        y0, z0 = _rationals(args.shift, 2)
        inputs["shift"] = [y0, z0]
        f = translate(f, y0, z0)
        inputs["translated_curve"] = f
    r = certify_general(f)
    verdict = "Certified" if r.certified else "Inconclusive"
    return Result(verdict, inputs, _general_evidence(r), HYPOTHESES if r.certified else {})


def cmd_expand_branch(args) -> Result:
    if args.order < 3:
        raise InputError("--order must be at least 3")
    f = to_curve(args.expr)
    b = branch_expand(f, args.order)
    evidence = {
        "order": b.order,
        "lambdas": [{"power": i, "lambda": b.coefficient(i)} for i in range(2, b.order + 1)],
        "residual_vanishes": branch_residual_vanishes(f, b),
    }
    return Result("Expanded", {"expression": _canonical(args.expr), "curve": f}, evidence)


def cmd_abel(args) -> Result:
    mode = DerivationMode(args.mode)
    coeffs = [coefficient(t, mode) for t in _split(args.coeffs)]
    if len(coeffs) < 2:
        raise InputError("--coeffs needs at least a2 and a3")
    r = classify_abel(coeffs, mode)
    verdict = "Certified" if r.certified else "Inconclusive"
    return Result(
        verdict,
        {"coeffs": coeffs, "mode": mode.value},
        _general_evidence(r),
        HYPOTHESES if r.certified else {},
    )


def cmd_mobius(args) -> Result:
    rc_texts, m_texts = _split(args.riccati), _split(args.matrix)
    if len(rc_texts) != 3 or len(m_texts) != 4:
        raise InputError("--riccati takes a2,a1,a0 and --matrix takes a,b,c,d")
    vals, mode = _qx_or_const(rc_texts + m_texts)
    rc = RiccatiCoeffs(*vals[:3], mode=mode)
    M = tuple(vals[3:])
    out = mobius_riccati(rc, M)
    evidence = {
        "transformed": list(out.as_tuple()),
        "mode": out.mode.value,
        "transformed_equation": out.to_curve(),
    }
    return Result("Transformed", {"riccati": list(rc.as_tuple()), "matrix": list(M), "mode": mode.value}, evidence)


def _weierstrass_evidence(g2: Fraction, g3: Fraction) -> dict:
    return {"g2": g2, "g3": g3, "discriminant_term": discriminant_term(g2, g3)}


def cmd_weierstrass(args) -> Result:
    g2, g3 = parse_rational(args.g2), parse_rational(args.g3)
    inputs: dict = {"g2": g2, "g3": g3}
    evidence = _weierstrass_evidence(g2, g3)
    try:
        evidence["j"] = j_invariant(g2, g3)
    except DegenerateCurve:
        evidence["reason"] = "27g3^2 - g2^3 = 0"
        return Result("Invalid", inputs, evidence)
    if args.compare:
        h2, h3 = _rationals(args.compare, 2)
        inputs["compare"] = [h2, h3]
        other = _weierstrass_evidence(h2, h3)
        try:
            other["j"] = j_invariant(h2, h3)
        except DegenerateCurve:
            raise InputError("the comparison curve has 27g3^2 - g2^3 = 0") from None
        evidence["compare"] = other
        evidence["isomorphic_over_closure"] = iso_over_kbar((g2, g3), (h2, h3))
    return Result("Valid", inputs, evidence)


def cmd_integrate_check(args) -> Result:
    mode = DerivationMode(args.mode)
    w = to_ratfn(args.expr, args.var)
    inputs = {"expression": _canonical(args.expr), "var": args.var, "mode": mode.value, "w": w}
    if mode is DerivationMode.CONST:
        if not w.is_constant():
            raise InputError("mode const takes a constant; use --mode qx for functions")
        a = has_antiderivative(w.constant_value(), mode)
        return Result("Exists" if a.exists else "None", inputs, {"antiderivative": _antiderivative(a)})
    a = has_antiderivative(w.with_var("x"), mode)
    evidence: dict = {"antiderivative": _antiderivative(a)}
    if a.exists and a.witness is not None and isinstance(a.witness, RatFn):
        evidence["antiderivative"]["witness"] = a.witness.with_var(args.var)
    if not a.exists:
        evidence["antiderivative"]["rt_resultant"] = a.rt_resultant
        p = residue_profile(w)
        evidence["commensurability"] = _commensurability(p.commensurable)
    return Result("Exists" if a.exists else "None", inputs, evidence)


def _seed(text: str, f: BiDiffPoly) -> tuple[Fraction, Fraction]:
    if ":" in text:
        a, b = text.split(":", 1)
        return parse_rational(a), parse_rational(b)
    y0 = parse_rational(text)
    # values of y'(0) on the curve f(y0, Z) = 0 at x = 0
    at0 = Poly([Fraction(0)] * (f.degree_Z + 1), "Z")
    for (i, j), c in f.terms.items():
        c0 = c(Fraction(0)) if isinstance(c, RatFn) else c
        at0 = at0 + Poly.monomial(j, "Z", c0 * y0**i)
    if at0.degree < 1:
        raise PreconditionError(f"no value of y'(0) fits y(0) = {y0}")
    if at0.degree == 1:
        return y0, -at0.coeff(0) / at0.coeff(1)
    roots = rational_roots(at0)
    if len(roots) != 1:
        raise InputError(f"y(0) = {y0} does not determine y'(0); give the seed as y0:z0")
    return y0, roots[0]


def cmd_depend(args) -> Result:
    f = to_curve(args.equation)
    if not f.involves_Z():
        raise InputError("the equation does not involve y'")
    seeds = [_seed(s, f) for s in _split(args.seeds)]
    if len(set(seeds)) != len(seeds):
        raise InputError("seeds must be distinct")
    if args.degree < 1 or args.xdegree < 0:
        raise InputError("--degree must be >= 1 and --xdegree >= 0")
    unknowns = len(relation_columns(len(seeds), args.degree, args.xdegree))
    order = args.order if args.order is not None else unknowns + SAFETY_MARGIN

    def regenerate(n: int):
        return [solve_series_curve(f, s, n) for s in seeds]

    res = find_algebraic_relation(regenerate(order), args.degree, args.xdegree, order, regenerate=regenerate)
    evidence: dict = {
        "bounds": {"degree": args.degree, "xdegree": args.xdegree, "order": order},
        "unknowns": unknowns,
        "nullity": res.nullity,
        "rejected_candidates": res.rejected,
        "notes": list(res.notes),
        "relation": None,
    }
    if res.relation is not None:
        rel = res.relation
        evidence["relation"] = {
            "terms": [{"exponents": list(a), "xpower": j, "coeff": c} for a, j, c in rel.terms],
            "text": rel.format(),
            "verified_order": rel.verified_order,
        }
    inputs = {
        "equation": _canonical(args.equation),
        "curve": f,
        "seeds": [list(s) for s in seeds],
    }
    return Result(res.tag, inputs, evidence)


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("pretty", "doc"), default="doc", help="doc = structured certificate")

    ap = argparse.ArgumentParser(prog="odeclass", description="Exact classification of first-order ODEs f(y, y') = 0.")
    ap.add_argument("--version", action="version", version=f"odeclass {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    p = sub.add_parser("classify-auto", parents=[common], help="classify y' = h(y)")
    p.add_argument("expr", help="h(y), or an equation linear in y' (read as '= 0')")
    p.set_defaults(run=cmd_classify_auto)

    p = sub.add_parser("certify-general", parents=[common], help="general-type certificate from branch coefficients")
    p.add_argument("expr")
    p.add_argument("--shift", metavar="Y0,Z0", help="move the point (Y0, Z0) of the curve to the origin first")
    p.set_defaults(run=cmd_certify_general)

    p = sub.add_parser("expand-branch", parents=[common], help="branch Z = sum lambda_i Y^i at the origin")
    p.add_argument("expr")
    p.add_argument("--order", type=int, default=3)
    p.set_defaults(run=cmd_expand_branch)

    p = sub.add_parser("abel", parents=[common], help="y' = a2 y^2 + a3 y^3 + ...")
    p.add_argument("--coeffs", required=True, metavar="A2,A3[,...]")
    p.add_argument("--mode", choices=("const", "qx"), default="qx")
    p.set_defaults(run=cmd_abel)

    p = sub.add_parser("mobius", parents=[common], help="transform a Riccati equation by t -> (a t + b)/(c t + d)")
    p.add_argument("--riccati", required=True, metavar="A2,A1,A0")
    p.add_argument("--matrix", required=True, metavar="A,B,C,D")
    p.set_defaults(run=cmd_mobius)

    p = sub.add_parser("weierstrass", parents=[common], help="validate (g2, g3) and compute j")
    p.add_argument("--g2", required=True)
    p.add_argument("--g3", required=True)
    p.add_argument("--compare", metavar="H2,H3")
    p.set_defaults(run=cmd_weierstrass)

    p = sub.add_parser("integrate-check", parents=[common], help="does w have a rational antiderivative?")
    p.add_argument("expr")
    p.add_argument("--var", choices=("x", "y"), default="x")
    p.add_argument("--mode", choices=("const", "qx"), default="qx")
    p.set_defaults(run=cmd_integrate_check)

    p = sub.add_parser("depend", parents=[common], help="bounded search for algebraic relations among solutions")
    p.add_argument("--equation", required=True)
    p.add_argument("--seeds", required=True, metavar="S1,S2,...", help="y0 or y0:z0 for each solution")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--xdegree", type=int, default=0)
    p.add_argument("--order", type=int)
    p.set_defaults(run=cmd_depend)
    return ap


# -- output ------------------------------------------------------------------


def _pretty_value(v: Any) -> str:
    if isinstance(v, BiDiffPoly):
        return v.format(("y", "y'"))
    if isinstance(v, list):
        return "[" + ", ".join(_pretty_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_pretty_value(x)}" for k, x in v.items()) + "}"
    return str(v)


def render_pretty(doc: dict) -> str:
    lines = [f"verdict: {doc['verdict']}"]
    for section in ("input", "evidence", "hypotheses"):
        for k, v in doc[section].items():
            if v is None or v == [] or v == {}:
                continue
            lines.append(f"{section}.{k}: {_pretty_value(v)}")
    return "\n".join(lines) + "\n"


def _emit(doc: dict, output: str, out) -> None:
    out.write(dumps(doc) if output == "doc" else render_pretty(doc))


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    raw_inputs = {k: v for k, v in vars(args).items() if k not in ("run", "command", "output")}
    try:
        res = args.run(args)
    except ParseError as exc:
        return _fail(args, raw_inputs, "InputError", EXIT_INPUT, str(exc), exc.offset, out, err)
    except PreconditionError as exc:
        return _fail(args, raw_inputs, "PreconditionFailed", EXIT_PRECONDITION, str(exc), -1, out, err)
    except (InputError, SingularMatrix, TruncationTooSmall, ZeroDivisionError, ValueError) as exc:
        offset = getattr(exc, "offset", -1)
        return _fail(args, raw_inputs, "InputError", EXIT_INPUT, str(exc), offset, out, err)
    doc = make_document(args.command, res.inputs, res.verdict, res.evidence, res.hypotheses)
    _emit(doc, args.output, out)
    return EXIT_OK


def _fail(args, inputs, verdict, code, message, offset, out, err) -> int:
    err.write(f"odeclass {args.command}: {message}\n")
    evidence: dict = {"message": message}
    if offset >= 0:
        evidence["offset"] = offset
    doc = make_document(args.command, inputs, verdict, evidence)
    _emit(doc, args.output, out)
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
