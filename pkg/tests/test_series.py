from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import rand_frac
from odeclass.curve import BiDiffPoly, PreconditionError
from odeclass.exactalg import Poly, RatFn
from odeclass.ratcalc import DerivationMode
from odeclass.series import (
    TruncationTooSmall,
    TruncSeries,
    curve_residual,
    echelon,
    exponent_vectors,
    find_algebraic_relation,
    nullspace,
    solve_series_autonomous,
    solve_series_curve,
)

y = Poly.gen("y")
Y, Z = BiDiffPoly.Y(), BiDiffPoly.Z()


# -- TruncSeries -----------------------------------------------------------------


def test_truncseries_arithmetic():
    a = TruncSeries([1, 1, 0, 0])  # 1 + x
    b = a.reciprocal()
    assert b.coeffs == (1, -1, 1, -1)
    assert (a * b).coeffs == (1, 0, 0, 0)
    assert (a**3).coeffs == (1, 3, 3, 1)
    assert a.derivative().order == 2
    assert (a + TruncSeries([1, 2])).order == 1
    assert TruncSeries.from_ratfn(1 / (1 - RatFn.gen("x")), 5).coeffs == (1,) * 6
    with pytest.raises(ZeroDivisionError):
        TruncSeries.from_ratfn(1 / RatFn.gen("x"), 3)


@given(st.lists(st.fractions(max_denominator=5, min_value=-5, max_value=5), min_size=3, max_size=6))
def test_apply_matches_composition(cs):
    u = TruncSeries([Fraction(1, 2)] + cs)
    p = Poly([1, -2, 3], "y")
    assert u.apply(p) == 1 - 2 * u + 3 * u * u


# -- autonomous solver --------------------------------------------------------------


def test_autonomous_examples():
    u = solve_series_autonomous(RatFn(y), 1, 8)
    assert u.coeffs == tuple(Fraction(1, math.factorial(n)) for n in range(9))
    u = solve_series_autonomous(RatFn(y**2), 1, 8)
    assert u.coeffs == (1,) * 9
    u = solve_series_autonomous(RatFn(y**3 - y**2), 2, 4)
    assert u.coeffs[:3] == (2, 4, 16)
    with pytest.raises(PreconditionError):
        solve_series_autonomous(RatFn(Poly.one("y"), y - 1), 1, 5)


def test_autonomous_against_closed_form():
    # y' = y/(y+1) has no elementary inverse, so compare with y' = 1 + y^2, u = tan(x + atan(y0))
    xs = sympy.Symbol("x")
    for y0 in (0, 1, Fraction(1, 2)):
        u = solve_series_autonomous(RatFn(y**2 + 1), y0, 10)
        c = sympy.Rational(y0.numerator, y0.denominator) if isinstance(y0, Fraction) else y0
        closed = (sympy.tan(xs) + c) / (1 - c * sympy.tan(xs))
        ser = sympy.series(closed, xs, 0, 11).removeO()
        assert [Fraction(str(ser.coeff(xs, n))) for n in range(11)] == list(u.coeffs)


@given(
    st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=1, max_size=4),
    st.fractions(min_value=-3, max_value=3, max_denominator=3),
)
@settings(max_examples=40, deadline=None)
def test_autonomous_residual(cs, y0):
    h = RatFn(Poly(cs, "y"))
    u = solve_series_autonomous(h, y0, 12)
    assert (u.derivative() - u.truncate(11).apply(h)).is_zero_to(12)


# -- curve solver -----------------------------------------------------------------------


def test_curve_examples():
    u = solve_series_curve(Z - Y**2, (1, 1), 10)
    assert u == solve_series_autonomous(RatFn(y**2), 1, 10)
    u = solve_series_curve(Z**2 - Y, (1, 1), 6)
    assert u.coeffs[:3] == (1, 1, Fraction(1, 4))
    assert (u.derivative() ** 2 - u.truncate(5)).is_zero_to(6)
    with pytest.raises(PreconditionError):
        solve_series_curve(Z**2 - Y, (0, 0), 5)
    with pytest.raises(PreconditionError):
        solve_series_curve(Z - Y**2, (1, 2), 5)


def test_curve_with_x_coefficients():
    x = RatFn.gen("x")
    QX = DerivationMode.QX
    f = BiDiffPoly({(0, 1): 1, (1, 0): -1 / (x + 1), (0, 0): -x}, QX)
    u = solve_series_curve(f, (2, 2), 12)
    assert curve_residual(f, u).is_zero_to(12)
    g = BiDiffPoly({(0, 1): 1, (1, 0): -1 / x}, QX)
    with pytest.raises(PreconditionError):
        solve_series_curve(g, (0, 0), 5)


def test_curve_random_residuals():
    rng = random.Random(41)
    done = 0
    while done < 20:
        f = BiDiffPoly({(rng.randint(0, 3), rng.randint(0, 2)): rand_frac(rng) for _ in range(4)})
        f = f + Z
        y0, z0 = rand_frac(rng), rand_frac(rng)
        f = f - f.evaluate(y0, z0)
        if not f.dZ().evaluate(y0, z0):
            continue
        u = solve_series_curve(f, (y0, z0), 10)
        assert curve_residual(f, u).is_zero_to(10)
        done += 1


# -- nullspace -------------------------------------------------------------------


def test_nullspace_against_sympy():
    rng = random.Random(42)
    for _ in range(30):
        nr, nc = rng.randint(1, 6), rng.randint(1, 7)
        rank = rng.randint(0, min(nr, nc))
        base = [[Fraction(rng.randint(-4, 4)) for _ in range(nc)] for _ in range(rank)]
        rows = []
        for _ in range(nr):
            coef = [rng.randint(-2, 2) for _ in range(rank)]
            rows.append([sum((c * b[j] for c, b in zip(coef, base)), Fraction(0)) for j in range(nc)])
        ours = nullspace(rows, nc)
        m = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in rows])
        assert len(ours) == len(m.nullspace())
        for v in ours:
            assert all(sum((a * b for a, b in zip(r, v)), Fraction(0)) == 0 for r in rows)


def test_echelon_exact_division():
    rows = [[2, 4, 6], [1, 3, 5], [3, 7, 11]]
    ech, piv = echelon(rows, 3)
    assert piv == [0, 1]
    assert nullspace(rows, 3) == [[Fraction(1), Fraction(-2), Fraction(1)]]


# -- relations ---------------------------------------------------------------------


def _sols(h, seeds):
    return lambda n: [solve_series_autonomous(h, s, n) for s in seeds]


def test_exponent_order():
    assert exponent_vectors(2, 1) == [(0, 0), (0, 1), (1, 0)]


def test_relation_linear():
    reg = _sols(RatFn(y), [1, 2])
    res = find_algebraic_relation(reg(13), 1, 0, 13, regenerate=reg)
    assert res.found
    assert res.relation.format() == "u2 - 2*u1 = 0"
    assert res.relation.vanishes_on(reg(26), 26)


def test_relation_reciprocal():
    reg = _sols(RatFn(y**2), [1, Fraction(1, 2)])
    res = find_algebraic_relation(reg(16), 2, 0, 16, regenerate=reg)
    assert res.found
    # proportional to u1 - u2 - u1*u2
    terms = {a: c for a, _, c in res.relation.terms}
    assert terms == {(0, 1): 1, (1, 0): -1, (1, 1): 1}


def test_relation_cross_ratio_for_riccati():
    x = RatFn.gen("x")
    f = BiDiffPoly({(0, 1): 1, (2, 0): -(x + 1), (1, 0): -x, (0, 0): -1}, DerivationMode.QX)
    s = [0, 1, 2, -1]
    seeds = [(v, v * v + 1) for v in s]

    def reg(n):
        return [solve_series_curve(f, sd, n) for sd in seeds]

    res = find_algebraic_relation(reg(25), 2, 0, 25, regenerate=reg)
    assert res.found and res.nullity == 1
    kappa = Fraction((s[0] - s[2]) * (s[1] - s[3]), (s[0] - s[3]) * (s[1] - s[2]))
    u = reg(30)
    cross = (u[0] - u[2]) * (u[1] - u[3]) - (u[0] - u[3]) * (u[1] - u[2]) * kappa
    assert cross.is_zero_to(30)


def test_relation_none_for_general_type():
    reg = _sols(RatFn(y**3 - y**2), [2, 3])
    res = find_algebraic_relation(reg(60), 3, 0, 60, regenerate=reg)
    assert not res.found and res.tag == "NoneAtBounds"
    assert (res.bounds.degree, res.bounds.xdegree, res.bounds.order) == (3, 0, 60)


def test_relation_truncation_checks():
    reg = _sols(RatFn(y), [1, 2])
    with pytest.raises(TruncationTooSmall):
        find_algebraic_relation(reg(12), 1, 0, 12, regenerate=reg)
    with pytest.raises(TruncationTooSmall):
        find_algebraic_relation(reg(13), 1, 0, 13)  # cannot re-verify at 26 without regenerate
    res = find_algebraic_relation(reg(30), 1, 0, 15)
    assert res.found and res.relation.verified_order == 30


def test_relation_with_x_terms():
    # u = e^x and v = x e^x: v - x u = 0
    reg = lambda n: [  # noqa: E731
        TruncSeries(Fraction(1, math.factorial(k)) for k in range(n + 1)),
        TruncSeries([0] + [Fraction(1, math.factorial(k - 1)) for k in range(1, n + 1)]),
    ]
    res = find_algebraic_relation(reg(20), 1, 1, 20, regenerate=reg)
    assert res.found
    assert res.relation.format() == "u2 - x*u1 = 0"
