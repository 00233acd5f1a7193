"""Shared generators and independent oracles for the tests."""

from __future__ import annotations

import random
from fractions import Fraction

import sympy

from odeclass.exactalg import Poly, RatFn


def rand_frac(rng: random.Random, size: int = 9, den: int = 5) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, den))


def rand_poly(
    rng: random.Random, deg: int, var: str = "Y", size: int = 9, den: int = 5, nonzero: bool = True
) -> Poly:
    while True:
        p = Poly([rand_frac(rng, size, den) for _ in range(deg + 1)], var)
        if p or not nonzero:
            return p


def rand_ratfn(rng: random.Random, dnum: int, dden: int, var: str = "Y") -> RatFn:
    num = rand_poly(rng, rng.randint(0, dnum), var)
    den = rand_poly(rng, rng.randint(1, dden), var)
    return RatFn(num, den)


def to_sympy(p, sym):
    """A Poly or RatFn as a sympy expression in ``sym``."""
    if isinstance(p, RatFn):
        return to_sympy(p.num, sym) / to_sympy(p.den, sym)
    return sum(sympy.Rational(c.numerator, c.denominator) * sym**i for i, c in enumerate(p.coeffs))


def from_sympy_poly(expr, sym, var: str = "Y") -> Poly:
    sp = sympy.Poly(sympy.expand(expr), sym)
    cs = [Fraction(int(c.p), int(c.q)) for c in reversed(sp.all_coeffs())]
    return Poly(cs, var)


def sylvester_resultant(p: Poly, q: Poly) -> Fraction:
    """Determinant of the Sylvester matrix, by exact Gaussian elimination."""
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (size - n - 1 - i))
    det = Fraction(1)
    a = [r[:] for r in rows]
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            if a[r][col]:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det
