from __future__ import annotations

import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from odeclass.cli import (
    BinOp,
    InputError,
    Neg,
    Num,
    ParseError,
    Pow,
    Var,
    autonomous_h,
    dumps,
    loads,
    main,
    parse,
    to_curve,
    to_ratfn,
    to_text,
)
from odeclass.curve import BiDiffPoly
from odeclass.exactalg import RatFn
from odeclass.ratcalc import DerivationMode, has_antiderivative

RECIP_X_EQ = "y' - (1/x)*y^2 - x*y*y' - (1/(x+1))*y^3 + y*y'^2"

# -- parser ------------------------------------------------------------------------


def test_parse_precedence():
    assert parse("1 + 2 * 3") == BinOp("+", Num(1), BinOp("*", Num(2), Num(3)))
    assert parse("1 - 2 - 3") == BinOp("-", BinOp("-", Num(1), Num(2)), Num(3))
    assert parse("-y^2") == Neg(Pow(Var("y"), Num(2)))
    assert parse("y^2^3") == Pow(Var("y"), Pow(Num(2), Num(3)))
    assert parse("y^-1") == Pow(Var("y"), Neg(Num(1)))
    assert parse("z") == parse("y'") == Var("z")
    assert parse("2/3*y") == BinOp("*", BinOp("/", Num(2), Num(3)), Var("y"))


def test_parse_example_equations():
    f = to_curve("y' - y^3 + y^2")
    Y, Z = BiDiffPoly.Y(), BiDiffPoly.Z()
    assert f == Z - Y**3 + Y**2
    x = RatFn.gen("x")
    Yq, Zq = BiDiffPoly.Y(DerivationMode.QX), BiDiffPoly.Z(DerivationMode.QX)
    g = to_curve(RECIP_X_EQ)
    assert g == Zq - (1 / x) * Yq**2 - x * Yq * Zq - (1 / (x + 1)) * Yq**3 + Yq * Zq**2
    assert g.mode is DerivationMode.QX


@pytest.mark.parametrize(
    "text, kind, offset",
    [
        ("y' + + y", "syntax", 3),
        ("y +", "syntax", 2),
        ("(y", "syntax", 2),
        ("y)", "syntax", 1),
        ("", "syntax", 0),
        ("()", "syntax", 1),
        ("2y", "syntax", 1),
        ("1.5*y", "lexical", 1),
        ("y # 2", "lexical", 2),
        ("x'", "lexical", 1),
        ("sin(y)", "identifier", 0),
        ("y + t", "identifier", 4),
        ("+y", "syntax", 0),
        ("y * / 2", "syntax", 2),
        ("é", "lexical", 0),
        ("y + é", "lexical", 4),
    ],
)
def test_parse_errors(text, kind, offset):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.kind == kind
    assert exc.value.offset == offset


def test_evaluation_errors():
    with pytest.raises(InputError):
        to_curve("y/y")
    with pytest.raises(InputError):
        to_curve("y^(1/2)")
    with pytest.raises(InputError):
        to_ratfn("1/(x - x)", "x")
    with pytest.raises(InputError):
        autonomous_h("x*y")
    with pytest.raises(InputError):
        autonomous_h("y'^2 - y")
    assert autonomous_h("y' - y/(y+1)") == RatFn.gen("y") / (RatFn.gen("y") + 1)
    assert autonomous_h("y^3 - y^2") == autonomous_h("2*y' - 2*y^3 + 2*y^2")


def _asts():
    leaves = st.one_of(
        st.integers(min_value=0, max_value=10**6).map(Num),
        st.sampled_from(["x", "y", "z"]).map(Var),
    )

    def extend(children):
        return st.one_of(
            children.map(Neg),
            st.tuples(st.sampled_from("+-*/"), children, children).map(lambda t: BinOp(*t)),
            st.tuples(children, children).map(lambda t: Pow(*t)),
        )

    return st.recursive(leaves, extend, max_leaves=12)


@given(_asts())
@settings(max_examples=500, deadline=None)
def test_parse_print_round_trip(e):
    assert parse(to_text(e)) == e


# -- certificates -------------------------------------------------------------------


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "argv",
    [
        ("classify-auto", "y^3 - y^2"),
        ("classify-auto", "y^2 - 2"),
        ("certify-general", RECIP_X_EQ),
        ("expand-branch", RECIP_X_EQ, "--order", "5"),
        ("abel", "--coeffs", "1/x,1/(x+1)", "--mode", "qx"),
        ("mobius", "--riccati", "1,x,0", "--matrix", "1,0,x,1"),
        ("weierstrass", "--g2", "4", "--g3", "1", "--compare", "16,0"),
        ("integrate-check", "1/(x^2-2)", "--var", "x", "--mode", "qx"),
        ("depend", "--equation", "y' - y^2", "--seeds", "1,1/2", "--degree", "2"),
    ],
)
def test_certificate_round_trip(argv):
    code, text, _ = run_cli(*argv)
    assert code == 0
    doc = loads(text)
    assert dumps(doc) == text
    assert doc["schema"] == "odeclass-certificate/1"
    assert set(doc) == {"schema", "tool", "command", "input", "verdict", "evidence", "hypotheses"}


def test_certificate_evidence_is_recheckable():
    _, text, _ = run_cli("certify-general", RECIP_X_EQ)
    doc = loads(text)
    l2, l3 = doc["evidence"]["lambda2"], doc["evidence"]["lambda3"]
    assert isinstance(l2, RatFn) and isinstance(l3, RatFn)
    assert not has_antiderivative(l2, DerivationMode.QX).exists
    assert not has_antiderivative(l3, DerivationMode.QX).exists
    assert to_curve(doc["input"]["expression"]) == doc["input"]["curve"]
    raw = json.loads(text)
    assert raw["evidence"]["lambda2"] == {"$type": "ratfn", "var": "x", "num": ["1"], "den": ["0", "1"]}


def test_cli_examples():
    code, text, _ = run_cli("classify-auto", "y^3 - y^2")
    doc = loads(text)
    assert code == 0 and doc["verdict"] == "General"
    residues = {d["pole"]: d["residue"] for d in doc["evidence"]["residues"]}
    assert residues == {Fraction(0): Fraction(-1), Fraction(1): Fraction(1)}

    code, text, _ = run_cli("certify-general", RECIP_X_EQ)
    doc = loads(text)
    x = RatFn.gen("x")
    assert code == 0 and doc["verdict"] == "Certified"
    assert doc["evidence"]["lambda2"] == 1 / x
    assert doc["evidence"]["lambda3"] == 1 + 1 / (x + 1)

    code, text, _ = run_cli("weierstrass", "--g2", "3", "--g3", "1")
    doc = loads(text)
    assert code == 0 and doc["verdict"] == "Invalid"
    assert doc["evidence"]["reason"] == "27g3^2 - g2^3 = 0"


def test_pretty_output():
    code, text, _ = run_cli("classify-auto", "y^2", "--output", "pretty")
    assert code == 0
    assert text.splitlines()[0] == "verdict: Exact"
    assert "evidence.witness: -1/y" in text


@pytest.mark.parametrize(
    "argv, code",
    [
        (("classify-auto", "y' + + y"), 2),
        (("classify-auto", "sin(y)"), 2),
        (("classify-auto", "x*y"), 2),
        (("classify-auto", "0"), 2),
        (("classify-auto", "1.5"), 2),
        (("certify-general", "y'^2 - y"), 3),
        (("certify-general", "y' - y"), 3),
        (("certify-general", "(y' - y^2)^2"), 3),
        (("certify-general", "y' - y^2", "--shift", "1"), 2),
        (("expand-branch", "y' - y^2", "--order", "2"), 2),
        (("abel", "--coeffs", "1"), 2),
        (("abel", "--coeffs", "1,y"), 2),
        (("mobius", "--riccati", "1,0,0", "--matrix", "1,2,2,4"), 2),
        (("mobius", "--riccati", "0,0,0", "--matrix", "1,0,0,1"), 2),
        (("weierstrass", "--g2", "1/0", "--g3", "1"), 2),
        (("weierstrass", "--g2", "1", "--g3", "0", "--compare", "3,1"), 2),
        (("integrate-check", "1/y", "--var", "x"), 2),
        (("integrate-check", "x", "--mode", "const"), 2),
        (("depend", "--equation", "y' - y^2", "--seeds", "1,1", "--degree", "2"), 2),
        (("depend", "--equation", "y' - y^2", "--seeds", "1,2", "--degree", "2", "--order", "5"), 2),
        (("depend", "--equation", "y' - 1/y", "--seeds", "0", "--degree", "1"), 2),
        (("depend", "--equation", "y'^2 - y", "--seeds", "0:0", "--degree", "1"), 3),
        (("depend", "--equation", "y' - 1/x*y", "--seeds", "1:1", "--degree", "1"), 3),
        (("nonsense",), 2),
        ((), 2),
    ],
)
def test_exit_codes(argv, code):
    got, text, err = run_cli(*argv)
    assert got == code
    if argv and argv[0] != "nonsense":
        doc = loads(text)
        assert doc["verdict"] in ("InputError", "PreconditionFailed")


def test_verdicts_exit_zero():
    assert run_cli("certify-general", "y' - y^2")[0] == 0  # Inconclusive
    code, text, _ = run_cli("depend", "--equation", "y' - y^3 + y^2", "--seeds", "2,3", "--degree", "3", "--order", "60")
    assert code == 0 and loads(text)["verdict"] == "NoneAtBounds"


def test_shift_option():
    code, text, _ = run_cli("certify-general", "y' - (y-1)^2 - (1/x)*(y-1)^3", "--shift", "1,0")
    doc = loads(text)
    assert code == 0
    assert doc["evidence"]["lambda2"] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "odeclass", "--version"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout.startswith("odeclass ")
