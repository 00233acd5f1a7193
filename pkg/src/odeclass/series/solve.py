"""Series solutions of ``y' = h(y)`` and of implicit equations ``f(y, y') = 0``.

Both solvers are online: the coefficient of ``x^n`` of every power and
product is computed once, as soon as the coefficients it depends on are
known, so the cost is quadratic in the truncation order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from ..curve import BiDiffPoly, PreconditionError
from ..exactalg import Poly, RatFn
from ..ratcalc import DerivationMode
from .truncated import TruncSeries


def _conv_at(a: list, b: list, n: int) -> Fraction:
    s = Fraction(0)
    for i in range(n + 1):
        ai = a[i]
        if ai:
            bi = b[n - i]
            if bi:
                s += ai * bi
    return s


def _as_ratfn(h: Any) -> RatFn:
    if isinstance(h, RatFn):
        return h
    if isinstance(h, Poly):
        return RatFn(h)
    return RatFn.const(Fraction(h), "y")


def solve_series_autonomous(h: Any, y0: Any, order: int) -> TruncSeries:
    """Series ``u`` with ``u(0) = y0`` and ``u' = h(u)`` modulo ``x^order``.

    Uses ``(n+1) u_{n+1} = [x^n] h(u)``; ``h(u)`` is obtained from
    ``den(u) * h(u) = num(u)`` one coefficient at a time.
    """
    h = _as_ratfn(h)
    y0 = Fraction(y0)
    if order < 1:
        raise ValueError("order must be at least 1")
    A, B = h.num, h.den
    if B(y0) == 0:
        raise PreconditionError(f"h has a pole at y0 = {y0}")
    deg = max(A.degree, B.degree, 1)
    u = [y0]
    powers = [[Fraction(1)]] + [[y0**k] for k in range(1, deg + 1)]
    b_ser: list[Fraction] = []
    v: list[Fraction] = []
    for n in range(order):
        if n > 0:
            powers[0].append(Fraction(0))
            for k in range(1, deg + 1):
                powers[k].append(_conv_at(u, powers[k - 1], n))
        an = sum((A.coeffs[k] * powers[k][n] for k in range(A.degree + 1)), Fraction(0))
        bn = sum((B.coeffs[k] * powers[k][n] for k in range(B.degree + 1)), Fraction(0))
        b_ser.append(bn)
        vn = an
        for i in range(1, n + 1):
            if b_ser[i]:
                vn -= b_ser[i] * v[n - i]
        vn /= b_ser[0]
        v.append(vn)
        u.append(vn / (n + 1))
    series = TruncSeries(u)
    residual = series.derivative() - series.truncate(order - 1).apply(h)
    assert residual.is_zero_to(order), "u' - h(u) does not vanish to the working order"
    return series


def _coefficient_series(f: BiDiffPoly, order: int) -> dict:
    out = {}
    for k, c in f.terms.items():
        try:
            out[k] = list(TruncSeries.from_ratfn(c, order).coeffs)
        except ZeroDivisionError:
            raise PreconditionError(f"coefficient {c} has a pole at x = 0; translate x first") from None
    return out


def curve_residual(f: BiDiffPoly, u: TruncSeries) -> TruncSeries:
    """``f(u, u')`` as a series of order ``u.order - 1``."""
    n = u.order - 1
    up = u.derivative()
    uu = u.truncate(n)
    total = TruncSeries.const(0, n)
    for (i, j), c in f.terms.items():
        total = total + TruncSeries.from_ratfn(c, n) * uu**i * up**j
    return total


def solve_series_curve(f: BiDiffPoly, seed: tuple[Any, Any], order: int) -> TruncSeries:
    """Series ``u`` with ``u(0) = y0``, ``u'(0) = z0`` and ``f(u, u') = 0 mod x^order``.

    At step ``m`` the coefficient ``[x^m] f(u, u')`` is affine in the new
    unknown ``v_m = (m+1) u_{m+1}`` with slope ``df/dZ(y0, z0)`` at ``x = 0``.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    y0, z0 = Fraction(seed[0]), Fraction(seed[1])
    coef = _coefficient_series(f, order)
    deg_y = max(f.degree_Y, 0)
    deg_z = max(f.degree_Z, 0)

    at0 = sum((c[0] * y0**i * z0**j for (i, j), c in coef.items()), Fraction(0))
    if at0 != 0:
        raise PreconditionError(f"seed ({y0}, {z0}) is not on the curve at x = 0: f = {at0}")
    slope = sum((c[0] * y0**i * j * z0 ** (j - 1) for (i, j), c in coef.items() if j), Fraction(0))
    if slope == 0:
        raise PreconditionError("df/dZ vanishes at the seed; the expansion is not determined")

    u = [y0, z0]
    v = [z0]
    U = [[Fraction(1)]] + [[y0**i] for i in range(1, deg_y + 1)]
    V = [[Fraction(1)]] + [[z0**j] for j in range(1, deg_z + 1)]
    W = {k: [U[k[0]][0] * V[k[1]][0]] for k in coef}
    T = {k: [coef[k][0] * W[k][0]] for k in coef}

    def fill_v(m: int) -> None:
        for j in range(1, deg_z + 1):
            V[j][m] = _conv_at(v, V[j - 1], m)
        for k in coef:
            W[k][m] = _conv_at(U[k[0]], V[k[1]], m)
            T[k][m] = _conv_at(coef[k], W[k], m)

    for m in range(1, order):
        U[0].append(Fraction(0))
        for i in range(1, deg_y + 1):
            U[i].append(_conv_at(u, U[i - 1], m))
        v.append(Fraction(0))
        V[0].append(Fraction(0))
        for j in range(1, deg_z + 1):
            V[j].append(Fraction(0))
        for k in coef:
            W[k].append(Fraction(0))
            T[k].append(Fraction(0))
        fill_v(m)
        e = sum((T[k][m] for k in coef), Fraction(0))
        v[m] = -e / slope
        fill_v(m)
        u.append(v[m] / (m + 1))

    series = TruncSeries(u[: order + 1])
    assert curve_residual(f, series).is_zero_to(order), "f(u, u') does not vanish to the working order"
    return series


def autonomous_rhs(f: BiDiffPoly) -> RatFn | None:
    """``h`` when ``f = a(Y) Z + b(Y)`` with rational coefficients, else None."""
    if f.mode is not DerivationMode.CONST or f.degree_Z != 1:
        return None
    a = Poly([f.coeff(i, 1) for i in range(f.degree_Y + 1)], "y")
    b = Poly([f.coeff(i, 0) for i in range(f.degree_Y + 1)], "y")
    if not a:
        return None
    return RatFn(-b, a)
