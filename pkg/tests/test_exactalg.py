from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import from_sympy_poly, rand_poly, rand_ratfn, sylvester_resultant, to_sympy
from odeclass.exactalg import (
    Poly,
    RatFn,
    VariableMismatch,
    factor_squarefree,
    is_squarefree,
    partial_fractions,
    poly_gcd,
    rational_roots,
    resultant,
    solve_bezout,
    squarefree_decompose,
)

Y = Poly.gen("Y")
ys = sympy.Symbol("y")

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(fracs, min_size=1, max_size=7).map(lambda cs: Poly(cs, "Y"))
nonzero_polys = polys.filter(bool)


# -- Poly ----------------------------------------------------------------------


def test_poly_basics():
    p = Y**2 - 1
    assert p.degree == 2 and p.lc == 1
    assert Poly.zero().degree == -1
    assert str(Y**3 - Y**2) == "Y^3 - Y^2"
    assert p(3) == 8
    assert (Y + 1) * (Y - 1) == p
    assert Poly.const(5, "Y") == 5


def test_variable_mismatch():
    with pytest.raises(VariableMismatch):
        Y + Poly.gen("t")


@given(nonzero_polys, nonzero_polys)
def test_division_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, polys)
def test_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(polys, polys)
def test_compose_matches_evaluation(a, b):
    c = a.compose(b)
    for v in (Fraction(-2), Fraction(1, 3), Fraction(5)):
        assert c(v) == a(b(v))


# -- gcd -----------------------------------------------------------------------


def test_gcd_examples():
    assert poly_gcd(Y**2 - 1, Y - 1) == Y - 1
    p = 3 * Y**2 + 6
    assert poly_gcd(p, Poly.zero()) == p.monic()


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=60)
def test_gcd_divides_both(p, q):
    g = poly_gcd(p, q)
    assert g.lc == 1
    assert p % g == 0 and q % g == 0
    assert (p / g) * g == p
    oracle = sympy.gcd(to_sympy(p, ys), to_sympy(q, ys))
    assert g == from_sympy_poly(oracle, ys).monic()


def test_gcd_of_common_multiple():
    rng = random.Random(1)
    for _ in range(40):
        g = rand_poly(rng, rng.randint(1, 3))
        while True:
            a, b = rand_poly(rng, rng.randint(0, 3)), rand_poly(rng, rng.randint(0, 3))
            if poly_gcd(a, b).degree == 0:
                break
        assert poly_gcd(g * a, g * b) == g.monic()


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=40)
def test_bezout(a, b):
    g = poly_gcd(a, b)
    s, t = solve_bezout(a, b, g)
    assert s * a + t * b == g


# -- squarefree ------------------------------------------------------------------


def test_squarefree_examples():
    d = squarefree_decompose(Y**3 - Y**2)
    assert d.unit == 1
    assert list(d.factors) == [(Y - 1, 1), (Y, 2)]
    p = 2 * Y**2 + 2
    d = squarefree_decompose(p)
    assert d.unit == 2 and list(d.factors) == [(p.monic(), 1)]
    with pytest.raises(ValueError):
        squarefree_decompose(Poly.zero())


def test_squarefree_recovers_exponents():
    rng = random.Random(2)
    for _ in range(30):
        roots = rng.sample(range(-6, 7), 3)
        exps = [rng.randint(1, 3) for _ in roots]
        p = Poly.one()
        for r, e in zip(roots, exps):
            p = p * (Y - r) ** e
        got = {}
        for f, e in squarefree_decompose(p).factors:
            for r in rational_roots(f):
                got[r] = e
        assert got == dict(zip(map(Fraction, roots), exps))


def test_squarefree_reconstruction_200():
    rng = random.Random(3)
    for _ in range(200):
        p = rand_poly(rng, rng.randint(1, 4)) * rand_poly(rng, rng.randint(0, 3)) ** rng.randint(1, 2)
        d = squarefree_decompose(p)
        assert d.expand() == p
        for f, _ in d.factors:
            assert is_squarefree(f) and f.lc == 1
        fs = [f for f, _ in d.factors]
        for i in range(len(fs)):
            for j in range(i + 1, len(fs)):
                assert poly_gcd(fs[i], fs[j]).degree == 0


# -- resultant -------------------------------------------------------------------


def test_resultant_examples():
    t = Poly.gen("t")
    q = Poly([Poly.one("t"), -2 * t], "Y")  # 1 - 2tY
    r = resultant(Y**2 - 2, q)
    assert r == -8 * t**2 + 1
    assert resultant(Y - 5, Y**3 + 2 * Y + 1) == 136
    assert resultant(Y**2 + 1, Y**2 + 1) == 0
    with pytest.raises(ValueError):
        resultant(Poly.zero(), Y)


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=60)
def test_resultant_matches_sylvester(p, q):
    if p.degree < 1 or q.degree < 1:
        return
    assert resultant(p, q) == sylvester_resultant(p, q)


def test_resultant_linear_case():
    rng = random.Random(4)
    for _ in range(30):
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        q = rand_poly(rng, 3)
        assert abs(resultant(Y - a, q)) == abs(q(a))


# -- partial fractions --------------------------------------------------------------


def test_partial_fraction_examples():
    pf = partial_fractions(RatFn(Poly.one(), Y**2 * (Y - 1)))
    assert pf.polynomial_part == 0
    terms = {(f, k): n for f, k, n in pf.terms}
    assert terms == {(Y - 1, 1): 1, (Y, 1): -1, (Y, 2): -1}
    pf = partial_fractions(RatFn(Y**2 + 1))
    assert pf.polynomial_part == Y**2 + 1 and pf.terms == ()
    pf = partial_fractions(RatFn(Y + 1, Y))
    assert pf.polynomial_part == 1
    assert [(f, k, n) for f, k, n in pf.terms] == [(Y, 1, Poly.one())]


def test_partial_fractions_recombine_200():
    rng = random.Random(5)
    for _ in range(200):
        w = rand_ratfn(rng, 8, 4)
        w = w * RatFn(Poly.one(), rand_poly(rng, rng.randint(0, 2))) ** rng.randint(1, 2)
        pf = partial_fractions(w)
        assert pf.recombine() == w
        for f, k, n in pf.terms:
            assert n.degree < f.degree


def test_partial_fractions_against_sympy():
    rng = random.Random(6)
    for _ in range(25):
        w = rand_ratfn(rng, 4, 4)
        pf = partial_fractions(w)
        ours = to_sympy(pf.polynomial_part, ys) + sum(
            to_sympy(n, ys) / to_sympy(f, ys) ** k for f, k, n in pf.terms
        )
        assert sympy.simplify(ours - sympy.apart(to_sympy(w, ys), ys)) == 0


# -- roots and factors -----------------------------------------------------------------


def test_rational_roots_example():
    assert rational_roots(6 * Y**3 - 5 * Y**2 - 2 * Y + 1) == [Fraction(-1, 2), Fraction(1, 3), Fraction(1)]
    assert rational_roots(Y**2 - 2) == []


@given(st.lists(fracs, min_size=1, max_size=4, unique=True), nonzero_polys)
@settings(max_examples=40)
def test_rational_roots_superset(roots, extra):
    p = Poly.from_roots(roots, "Y") * extra
    expected = {r for r in sympy.roots(to_sympy(p, ys), ys) if r.is_rational}
    assert set(rational_roots(p)) == {Fraction(int(r.p), int(r.q)) for r in expected}


def test_factor_squarefree_against_sympy():
    rng = random.Random(7)
    for _ in range(60):
        p = Poly.one()
        for _ in range(rng.randint(1, 3)):
            p = p * rand_poly(rng, rng.randint(1, 2), size=4, den=1)
        p = p.monic()
        if not is_squarefree(p):
            continue
        fac = factor_squarefree(p)
        prod = Poly.one()
        for f in fac.factors:
            prod = prod * f
        if fac.unfactored is not None:
            prod = prod * fac.unfactored
        assert prod == p
        if fac.unfactored is None:
            _, sym_factors = sympy.factor_list(to_sympy(p, ys), ys)
            assert len(sym_factors) == len(fac.factors)


def test_quartic_split():
    p = (Y**2 - 2) * (Y**2 + Y + 3)
    fac = factor_squarefree(p)
    assert sorted(str(f) for f in fac.factors) == sorted([str(Y**2 - 2), str(Y**2 + Y + 3)])
    assert fac.unfactored is None


# -- RatFn -------------------------------------------------------------------------------


def test_ratfn_canonical():
    w = RatFn(2 * Y**2 - 2, 4 * Y - 4)
    assert w.den.lc == 1
    assert w == RatFn(Y + 1, Poly.const(2, "Y"))
    assert str(RatFn(Poly.gen("x") + 2, Poly.gen("x") + 1)) == "(x + 2)/(x + 1)"
    assert RatFn.const(3, "x") == 3


def test_ratfn_derivative_examples():
    y = RatFn.gen("Y")
    assert (1 / y).derive() == -1 / y**2
    x = RatFn.gen("x")
    assert (1 + 1 / (x + 1)).derive() == -1 / (x + 1) ** 2


def test_ratfn_arithmetic_against_sympy():
    rng = random.Random(8)
    for _ in range(40):
        a, b = rand_ratfn(rng, 3, 3), rand_ratfn(rng, 3, 3)
        for ours, theirs in (
            (a + b, to_sympy(a, ys) + to_sympy(b, ys)),
            (a * b, to_sympy(a, ys) * to_sympy(b, ys)),
            (a.derive(), sympy.diff(to_sympy(a, ys), ys)),
        ):
            assert sympy.simplify(to_sympy(ours, ys) - theirs) == 0
