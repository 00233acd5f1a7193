"""GCD, squarefree decomposition, resultants and partial fractions over Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Any

from .poly import Poly, VariableMismatch


# ---------------------------------------------------------------------------
# integer helpers


def int_primitive(p: Poly) -> list[int]:
    """Primitive integer coefficient list of ``p`` with positive leading term."""
    if not p:
        return []
    den = lcm(*(Fraction(c).denominator for c in p.coeffs))
    ints = [int(Fraction(c) * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _int_strip(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        k = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, cb in enumerate(b):
            r[i + k] -= lr * cb
        r.pop()
        _int_strip(r)
    return r


def _int_primpart(a: list[int]) -> list[int]:
    g = 0
    for c in a:
        g = gcd(g, c)
    return [c // g for c in a]


# ---------------------------------------------------------------------------
# gcd and friends


def _check_vars(p: Poly, q: Poly) -> None:
    if p.var != q.var and not (p.is_constant() or q.is_constant()):
        raise VariableMismatch(f"{p.var} vs {q.var}")


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q via the primitive remainder sequence."""
    _check_vars(p, q)
    var = p.var if not p.is_constant() else q.var
    if not q:
        return p.monic().with_var(var)
    if not p:
        return q.monic().with_var(var)
    a, b = int_primitive(p), int_primitive(q)
    if len(a) < len(b):
        a, b = b, a
    while True:
        if len(b) == 1:
            return Poly.one(var)
        r = _int_prem(a, b)
        if not r:
            return Poly(b, var).monic()
        a, b = b, _int_primpart(r)


def ext_euclid(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(s, t, g)`` with ``s*a + t*b = g`` and ``g`` the monic gcd."""
    _check_vars(a, b)
    var = a.var
    r0, r1 = a, b
    s0, s1 = Poly.one(var), Poly.zero(var)
    t0, t1 = Poly.zero(var), Poly.one(var)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return s0, t0, r0
    lc = r0.lc
    return s0 / lc, t0 / lc, r0 / lc


def solve_bezout(a: Poly, b: Poly, c: Poly) -> tuple[Poly, Poly]:
    """Solve ``s*a + t*b = c`` with ``deg s < deg b``; gcd(a, b) must divide c."""
    s, t, g = ext_euclid(a, b)
    k = c.exquo(g)
    s = s * k
    if b.degree > 0:
        s = s % b
    t = (c - s * a).exquo(b)
    return s, t


def squarefree_part(p: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of ``p``."""
    if not p:
        raise ValueError("squarefree part of zero")
    return p.exquo(poly_gcd(p, p.derivative())).monic()


def is_squarefree(p: Poly) -> bool:
    return poly_gcd(p, p.derivative()).degree == 0


# ---------------------------------------------------------------------------
# squarefree decomposition


@dataclass(frozen=True)
class SqfDecomp:
    """``unit * prod(factor**mult)``, factors monic, squarefree, coprime."""

    unit: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def expand(self, var: str | None = None) -> Poly:
        v = var or (self.factors[0][0].var if self.factors else "Y")
        out = Poly.const(self.unit, v)
        for f, e in self.factors:
            out = out * f**e
        return out


def squarefree_decompose(p: Poly) -> SqfDecomp:
    """Yun's algorithm."""
    if not p:
        raise ValueError("squarefree decomposition of the zero polynomial")
    unit = Fraction(p.lc)
    a = p.monic()
    if a.degree == 0:
        return SqfDecomp(unit, ())
    b = a.derivative()
    c = poly_gcd(a, b)
    w = a.exquo(c)
    y = b.exquo(c)
    z = y - w.derivative()
    out: list[tuple[Poly, int]] = []
    i = 1
    while w.degree > 0:
        g = poly_gcd(w, z)
        if g.degree > 0:
            out.append((g, i))
        w = w.exquo(g)
        y = z.exquo(g)
        z = y - w.derivative()
        i += 1
    return SqfDecomp(unit, tuple(out))


# ---------------------------------------------------------------------------
# resultants


def _exquo(a: Any, b: Any) -> Any:
    if isinstance(a, Poly):
        return a.exquo(b)
    return a / b


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder ``lc(b)**(deg a - deg b + 1) * a mod b`` over a domain."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        k = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, cb in enumerate(b):
            r[i + k] = r[i + k] - lr * cb
        r.pop()
        while r and not r[-1]:
            r.pop()
        e -= 1
    if e > 0:
        f = lb**e
        r = [f * c for c in r]
    return r


def resultant(p: Poly, q: Poly) -> Any:
    """Resultant with respect to the polynomials' variable.

    Runs the subresultant remainder sequence, so every division performed is
    exact in the coefficient domain. Coefficients may be fractions or
    polynomials in a second variable; the result has the coefficient type.
    """
    _check_vars(p, q)
    if not p or not q:
        raise ValueError("resultant with the zero polynomial")
    a, b = list(p.coeffs), list(q.coeffs)
    inner = next((c.var for c in a + b if isinstance(c, Poly)), None)
    if inner is not None:
        a = [c if isinstance(c, Poly) else Poly.const(c, inner) for c in a]
        b = [c if isinstance(c, Poly) else Poly.const(c, inner) for c in b]
        one: Any = Poly.one(inner)
    else:
        one = Fraction(1)
    sign = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) * (len(b) - 1) % 2:
            sign = -1
    if len(b) == 1:
        return sign * b[0] ** (len(a) - 1) if len(a) > 1 else one
    g = one
    h = one
    while True:
        delta = len(a) - len(b)
        if (len(a) - 1) % 2 == 1 and (len(b) - 1) % 2 == 1:
            sign = -sign
        r = _prem(a, b)
        if not r:
            return 0 * one
        a = b
        div = g * h**delta
        b = [_exquo(c, div) for c in r]
        g = a[-1]
        if delta == 0:
            pass
        else:
            h = _exquo(g**delta, h ** (delta - 1))
        if len(b) == 1:
            da = len(a) - 1
            h = _exquo(b[0] ** da, h ** (da - 1)) if da > 0 else one
            return sign * h


# ---------------------------------------------------------------------------
# partial fractions


@dataclass(frozen=True)
class PartialFractions:
    """``polynomial_part + sum(num / factor**order)``."""

    polynomial_part: Poly
    terms: tuple[tuple[Poly, int, Poly], ...]

    def recombine(self):
        from .ratfn import RatFn

        total = RatFn(self.polynomial_part)
        for f, k, n in self.terms:
            total = total + RatFn(n, f**k)
        return total

    def simple_pole_terms(self) -> tuple[tuple[Poly, int, Poly], ...]:
        return tuple(t for t in self.terms if t[1] == 1)


def partial_fractions(w) -> PartialFractions:
    """Split ``w`` over the squarefree factorization of its denominator."""
    num, den = w.num, w.den
    var = w.var
    poly_part, rem = divmod(num, den)
    poly_part = poly_part.with_var(var)
    if den.degree <= 0 or not rem:
        return PartialFractions(poly_part, ())
    blocks = [(f, e) for f, e in squarefree_decompose(den).factors]
    terms: list[tuple[Poly, int, Poly]] = []
    rest_den = den
    rest_num = rem
    for idx, (f, e) in enumerate(blocks):
        block = f**e
        if idx == len(blocks) - 1:
            s = rest_num
        else:
            other = rest_den.exquo(block)
            # rest_num/(block*other) = s/block + t/other
            s, t = solve_bezout(other, block, rest_num)
            rest_num, rest_den = t, other
        # f-adic expansion of s
        k = e
        while s and k > 0:
            s, c = divmod(s, f)
            if c:
                terms.append((f, k, c))
            k -= 1
    return PartialFractions(poly_part, tuple(terms))


# ---------------------------------------------------------------------------
# rational roots (exact, via Sturm sequences)


def _sturm_chain(q: Poly) -> list[Poly]:
    chain = [q, q.derivative()]
    while chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if not r:
            break
        chain.append(-r)
    return chain


def _sign_changes(chain: list[Poly], x: int) -> int:
    count = 0
    last = 0
    for p in chain:
        v = p(x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def _integer_roots_monic(q: list[int]) -> list[int]:
    """Integer roots of a squarefree monic integer polynomial."""
    n = len(q) - 1
    if n <= 0:
        return []
    if n == 1:
        return [-q[0]]
    bound = 1 + max(abs(c) for c in q[:-1])
    poly = Poly(q, "s")
    chain = _sturm_chain(poly)
    roots: list[int] = []
    stack = [(-bound - 1, bound, _sign_changes(chain, -bound - 1), _sign_changes(chain, bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        if vlo - vhi == 0:
            continue
        if hi - lo == 1:
            if poly(hi) == 0:
                roots.append(hi)
            continue
        mid = (lo + hi) // 2
        vmid = _sign_changes(chain, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    return sorted(roots)


def rational_roots(p: Poly) -> list[Fraction]:
    """All distinct rational roots of ``p``, ascending."""
    if not p:
        raise ValueError("rational roots of the zero polynomial")
    if p.degree <= 0:
        return []
    a = int_primitive(squarefree_part(p))
    roots: list[Fraction] = []
    if a[0] == 0:
        roots.append(Fraction(0))
        a = a[1:]
    n = len(a) - 1
    if n >= 1:
        lc_ = a[-1]
        monic = [a[k] * lc_ ** (n - 1 - k) for k in range(n)] + [1]
        roots.extend(Fraction(r, lc_) for r in _integer_roots_monic(monic))
    return sorted(roots)


# ---------------------------------------------------------------------------
# factorization over Q for small degrees

QUARTIC_CONSTANT_CAP = 10**12


@dataclass(frozen=True)
class QFactorization:
    """Monic irreducible factors over Q plus an optional unfactored cofactor."""

    factors: tuple[Poly, ...]
    unfactored: Poly | None = None


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def _split_quartic(m: Poly) -> tuple[Poly, Poly] | None | str:
    """Quadratic factors of a monic quartic without rational roots.

    Returns the pair, ``None`` when the quartic is irreducible, or the string
    ``"unfactored"`` when the search would be too large.
    """
    var = m.var
    D = lcm(*(Fraction(c).denominator for c in m.coeffs))
    q = [int(Fraction(m.coeff(k)) * D ** (4 - k)) for k in range(5)]
    d, c, b, a = q[0], q[1], q[2], q[3]
    if abs(d) > QUARTIC_CONSTANT_CAP:
        return "unfactored"
    for e in _divisors(d):
        for Q1 in (e, -e):
            S1 = d // Q1
            if Q1 != S1:
                num = c - a * Q1
                den = S1 - Q1
                if num % den:
                    continue
                P = num // den
                candidates = [(P, a - P)]
            else:
                if c != a * Q1:
                    continue
                disc = _isqrt_exact(a * a - 4 * (b - 2 * Q1))
                if disc is None or (a + disc) % 2:
                    continue
                P = (a + disc) // 2
                candidates = [(P, a - P)]
            for P, R in candidates:
                if Q1 + S1 + P * R != b or P * S1 + Q1 * R != c:
                    continue
                g1 = Poly([Fraction(Q1, D * D), Fraction(P, D), 1], var)
                g2 = Poly([Fraction(S1, D * D), Fraction(R, D), 1], var)
                if g1 * g2 == m:
                    return (g1, g2) if (g1.coeffs <= g2.coeffs) else (g2, g1)
    return None


def factor_squarefree(p: Poly) -> QFactorization:
    """Factor a squarefree polynomial over Q.

    Rational roots are extracted exactly; a remaining cofactor of degree 2
    or 3 is irreducible, degree 4 is searched for a quadratic split, and
    anything larger is returned unfactored.
    """
    if not p or p.degree <= 0:
        return QFactorization(())
    p = p.monic()
    var = p.var
    roots = rational_roots(p)
    linear = [Poly([-r, 1], var) for r in roots]
    rest = p
    for f in linear:
        rest = rest.exquo(f)
    rest = rest.monic()
    factors: list[Poly] = list(linear)
    unfactored = None
    if rest.degree in (2, 3):
        factors.append(rest)
    elif rest.degree == 4:
        split = _split_quartic(rest)
        if split == "unfactored":
            unfactored = rest
        elif split is None:
            factors.append(rest)
        else:
            factors.extend(split)
    elif rest.degree >= 5:
        unfactored = rest
    return QFactorization(tuple(factors), unfactored)
