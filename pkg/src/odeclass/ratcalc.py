"""Integration analysis of rational functions.

Hermite reduction splits off the rational part of an antiderivative; the
Rothstein-Trager resultant of the remainder has the residues as its roots.
From these two pieces we decide antiderivative existence, recognise
logarithmic derivatives and test whether a set of residues is
commensurable (all integer multiples of one constant).

Residues live in the algebraic closure of Q, but nothing here constructs
algebraic numbers: commensurability is read off the shapes of the factors
of the resultant over Q. An irreducible polynomial whose roots have
pairwise rational ratios is either linear or ``t**2 - a``, so the rule is

* all factors linear: Yes (rational residues share a denominator);
* all factors ``t**2 - a_i`` with every ``a_i/a_j`` a rational square: Yes;
* anything else: No.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Any

from .exactalg import (
    Poly,
    RatFn,
    factor_squarefree,
    is_squarefree,
    rational_roots,
    resultant,
    solve_bezout,
    squarefree_decompose,
    squarefree_part,
)


class DerivationMode(str, Enum):
    """Which derivation acts on scalars.

    ``CONST`` is the zero derivation on Q (autonomous equations); ``QX``
    takes scalars to be rational functions of ``x`` with ``d/dx``.
    """

    CONST = "const"
    QX = "qx"


class Decision(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def as_scalar(c: Any, mode: DerivationMode) -> Any:
    """Coerce a coefficient into the field used by ``mode``."""
    if mode is DerivationMode.QX:
        if isinstance(c, RatFn):
            return c if not c.is_constant() else RatFn.const(c.constant_value(), "x")
        if isinstance(c, Poly):
            return RatFn(c.with_var("x") if c.is_constant() else c)
        return RatFn.const(Fraction(c), "x")
    if isinstance(c, RatFn):
        return c.constant_value()
    return Fraction(c)


def derive_scalar(c: Any) -> Any:
    """Derivative of a coefficient-field element (zero on plain rationals)."""
    if isinstance(c, RatFn):
        return c.derive()
    return Fraction(0)


def derive(w: RatFn | Fraction | int, var: str | None = None) -> RatFn | Fraction:
    """Exact derivative of ``w`` with respect to ``var`` (default: its own)."""
    if not isinstance(w, RatFn):
        return Fraction(0)
    if var is not None and var != w.var:
        return RatFn.const(0, w.var)
    return w.derive()


# ---------------------------------------------------------------------------
# Hermite reduction


@dataclass(frozen=True)
class HermiteResult:
    """``input = rational_part' + remainder`` with squarefree remainder denominator.

    The remainder is always a proper fraction; the antiderivative of the
    input's polynomial part is folded into ``rational_part``.
    """

    rational_part: RatFn
    remainder: RatFn


def hermite_reduce(w: RatFn) -> HermiteResult:
    var = w.var
    poly_part, a = divmod(w.num, w.den)
    d = w.den
    g = RatFn(poly_part.integral().with_var(var))
    if d.degree > 0 and a:
        for v, i in squarefree_decompose(d).factors:
            if i < 2:
                continue
            u = d.exquo(v**i)
            uvp = u * v.derivative()
            for j in range(i - 1, 0, -1):
                b, c = solve_bezout(uvp, v, -a / j)
                g = g + RatFn(b, v**j, var)
                a = -j * c - u * b.derivative()
            d = u * v
    return HermiteResult(g, RatFn(a.with_var(var), d.with_var(var), var))


# ---------------------------------------------------------------------------
# residues


def rt_resultant(h: RatFn) -> Poly:
    """Monic squarefree ``R(t)`` whose roots are the residues of ``h``.

    ``R = sqfpart(Res_Y(den, num - t*den'))``; requires a squarefree
    denominator and a proper fraction.
    """
    num, den = h.num, h.den
    if den.degree > 0 and not is_squarefree(den):
        raise ValueError(f"denominator of {h} is not squarefree")
    if num.degree >= den.degree and num:
        raise ValueError(f"{h} is not a proper fraction")
    if not num:
        return Poly.one("t")
    dp = den.derivative()
    n = max(num.degree, dp.degree) + 1
    b = Poly([Poly([num.coeff(i), -dp.coeff(i)], "t") for i in range(n)], h.var)
    a = Poly([Poly.const(c, "t") for c in den.coeffs], h.var)
    r = resultant(a, b)
    if not isinstance(r, Poly):
        r = Poly.const(r, "t")
    return squarefree_part(r.with_var("t"))


def rational_pole_residues(h: RatFn) -> dict[Fraction, Fraction]:
    """Residues at the rational simple poles of ``h`` (squarefree denominator)."""
    dp = h.den.derivative()
    return {a: h.num(a) / dp(a) for a in rational_roots(h.den)} if h.den.degree > 0 else {}


class Shape(str, Enum):
    LINEAR = "linear"
    QUADRATIC_BINOMIAL = "quadratic_binomial"
    OTHER = "other"


def factor_shape(f: Poly) -> Shape:
    if f.degree == 1:
        return Shape.LINEAR
    if f.degree == 2 and not f.coeff(1):
        return Shape.QUADRATIC_BINOMIAL
    return Shape.OTHER


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def _rational_gcd(values: list[Fraction]) -> Fraction:
    num = 0
    for v in values:
        num = gcd(num, v.numerator)
    return Fraction(num, lcm(*(v.denominator for v in values)))


@dataclass(frozen=True)
class Commensurability:
    """Outcome of the residue commensurability test.

    For ``YES`` the witness describes the scale class: for rational
    residues ``scale`` and integer ``multipliers`` with
    ``residue_i = multipliers[i] * scale``; for binomial factors
    ``t**2 - a_i``, ``base`` is ``a_1`` and ``ratios[i]`` is the rational
    ``sqrt(a_i / a_1)``, so the residues are ``+-ratios[i] * sqrt(base)``.
    """

    decision: Decision
    reason: str
    factors: tuple[tuple[Poly, Shape], ...] = ()
    unfactored: Poly | None = None
    witness: dict = field(default_factory=dict)


def _split_even_part(u: Poly) -> list[Poly] | None:
    """Binomial factors of an even polynomial without rational roots, if any."""
    if any(u.coeff(i) for i in range(1, u.degree + 1, 2)):
        return None
    p = Poly([u.coeff(i) for i in range(0, u.degree + 1, 2)], "u")
    roots = rational_roots(p)
    if len(roots) != p.degree:
        return None
    return [Poly([-a, 0, 1], u.var) for a in roots]


def residues_commensurable(R: Poly) -> Commensurability:
    """Decide whether the roots of ``R`` are pairwise rational multiples."""
    if not R or R.degree < 1:
        return Commensurability(Decision.YES, "no residues")
    if not R.coeff(0):
        raise ValueError("R(0) = 0: zero residues must be removed first")
    R = R.monic()
    fac = factor_squarefree(R)
    factors = [(f, factor_shape(f)) for f in fac.factors]
    unfactored = fac.unfactored
    if unfactored is not None:
        # no rational roots left: odd degree forces an irreducible factor of
        # degree >= 3, and an all-binomial product must be even in t
        if unfactored.degree % 2 == 1:
            return Commensurability(
                Decision.NO,
                "unfactored part of odd degree has an irreducible factor of degree >= 3",
                tuple(factors),
                unfactored,
            )
        split = _split_even_part(unfactored)
        if split is None:
            return Commensurability(
                Decision.NO,
                "unfactored part is not a product of binomials t^2 - a",
                tuple(factors),
                unfactored,
            )
        factors.extend((f, Shape.QUADRATIC_BINOMIAL) for f in split)
        unfactored = None
    factors_t = tuple(factors)
    shapes = {s for _, s in factors}
    if Shape.OTHER in shapes:
        bad = next(f for f, s in factors if s is Shape.OTHER)
        why = "non-binomial quadratic factor" if bad.degree == 2 else f"irreducible factor of degree {bad.degree}"
        return Commensurability(Decision.NO, f"{why}: {bad}", factors_t)
    if shapes == {Shape.LINEAR}:
        residues = sorted(-f.coeff(0) for f, _ in factors)
        scale = _rational_gcd(residues)
        return Commensurability(
            Decision.YES,
            "all residues rational",
            factors_t,
            witness={"residues": residues, "scale": scale, "multipliers": [int(r / scale) for r in residues]},
        )
    if shapes == {Shape.QUADRATIC_BINOMIAL}:
        bases = [-f.coeff(0) for f, _ in factors]
        base = bases[0]
        ratios = []
        for a in bases:
            s = _rational_sqrt(a / base)
            if s is None:
                return Commensurability(
                    Decision.NO,
                    f"ratio {a / base} of binomial constants is not a rational square",
                    factors_t,
                )
            ratios.append(s)
        return Commensurability(
            Decision.YES,
            "residues are rational multiples of sqrt(base)",
            factors_t,
            witness={"base": base, "ratios": ratios},
        )
    return Commensurability(Decision.NO, "rational residue mixed with irrational residue", factors_t)


# ---------------------------------------------------------------------------
# profiles and certificates


@dataclass(frozen=True)
class ResidueProfile:
    """Residue data of a rational function.

    ``rt_resultant`` is taken from the Hermite remainder, so it describes
    the residues of the function itself even with higher-order poles.
    """

    poly_part_zero: bool
    simple_poles_only: bool
    remainder: RatFn
    rt_resultant: Poly
    rational_residues: dict
    commensurable: Commensurability | None

    @property
    def has_residues(self) -> bool:
        return self.rt_resultant.degree > 0

    @property
    def rt_factors(self):
        return self.commensurable.factors if self.commensurable else ()


def residue_profile(w: RatFn) -> ResidueProfile:
    rem = hermite_reduce(w).remainder
    R = rt_resultant(rem)
    simple = w.den.degree <= 0 or is_squarefree(w.den)
    return ResidueProfile(
        poly_part_zero=w.num.degree < w.den.degree,
        simple_poles_only=simple,
        remainder=rem,
        rt_resultant=R,
        rational_residues=rational_pole_residues(rem) if rem else {},
        commensurable=residues_commensurable(R) if R.degree > 0 else None,
    )


@dataclass(frozen=True)
class Antiderivative:
    """Result of :func:`has_antiderivative`.

    ``exists`` with a ``witness`` whose derivative is the input, or not,
    with the evidence: the residue resultant for ``QX`` mode, or the nonzero
    constant itself under the zero derivation.
    """

    exists: bool
    mode: DerivationMode
    witness: Any = None
    rt_resultant: Poly | None = None
    rational_residues: dict = field(default_factory=dict)
    reason: str = ""


def has_antiderivative(w: Any, mode: DerivationMode) -> Antiderivative:
    mode = DerivationMode(mode)
    if mode is DerivationMode.CONST:
        c = as_scalar(w, mode)
        if c == 0:
            return Antiderivative(True, mode, witness=Fraction(0), reason="zero")
        return Antiderivative(False, mode, reason=f"nonzero constant {c} under the zero derivation")
    w = as_scalar(w, mode)
    hr = hermite_reduce(w)
    if not hr.remainder:
        return Antiderivative(True, mode, witness=hr.rational_part, reason="Hermite remainder vanishes")
    R = rt_resultant(hr.remainder)
    return Antiderivative(
        False,
        mode,
        rt_resultant=R,
        rational_residues=rational_pole_residues(hr.remainder),
        reason="nonzero residues",
    )


@dataclass(frozen=True)
class LogDerivativeForm:
    """Whether ``w = c * sum(m_i / (y - c_i))`` with integer ``m_i``."""

    decision: Decision
    reason: str
    rt_resultant: Poly | None = None
    commensurable: Commensurability | None = None


def is_log_derivative_form(w: RatFn) -> LogDerivativeForm:
    if not w:
        return LogDerivativeForm(Decision.NO, "zero function")
    if w.num.degree >= w.den.degree:
        return LogDerivativeForm(Decision.NO, "nonzero polynomial part")
    if not is_squarefree(w.den):
        return LogDerivativeForm(Decision.NO, "pole of order >= 2")
    R = rt_resultant(w)
    com = residues_commensurable(R)
    return LogDerivativeForm(com.decision, com.reason, R, com)
