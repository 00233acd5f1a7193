"""Plane curves ``f(Y, Z) = 0`` read as first-order equations ``f(y, y') = 0``.

Coefficients are rationals (``DerivationMode.CONST``) or rational
functions of ``x`` (``DerivationMode.QX``). At a simple point with tangent
``Z = 0`` the curve has a Y-adic branch ``Z = l2*Y^2 + l3*Y^3 + ...``;
:func:`branch_expand` computes it by undetermined coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Iterable, Mapping

from .exactalg import Poly, RatFn, resultant
from .ratcalc import DerivationMode, as_scalar


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class BiDiffPoly:
    """Polynomial in ``Y`` (the unknown) and ``Z`` (its derivative)."""

    __slots__ = ("terms", "mode")

    def __init__(self, terms: Mapping[tuple[int, int], Any], mode: DerivationMode | str = DerivationMode.CONST):
        mode = DerivationMode(mode)
        clean = {}
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial {(i, j)}")
            c = as_scalar(c, mode)
            if c:
                clean[(i, j)] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("BiDiffPoly is immutable")

    @classmethod
    def Y(cls, mode=DerivationMode.CONST) -> BiDiffPoly:
        return cls({(1, 0): 1}, mode)

    @classmethod
    def Z(cls, mode=DerivationMode.CONST) -> BiDiffPoly:
        return cls({(0, 1): 1}, mode)

    @classmethod
    def const(cls, c: Any, mode=DerivationMode.CONST) -> BiDiffPoly:
        return cls({(0, 0): c}, mode)

    # -- queries ------------------------------------------------------------

    def coeff(self, i: int, j: int) -> Any:
        return self.terms.get((i, j), as_scalar(0, self.mode))

    @property
    def degree_Y(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def degree_Z(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def involves_Z(self) -> bool:
        return self.degree_Z >= 1

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, BiDiffPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other: Any) -> BiDiffPoly:
        if isinstance(other, BiDiffPoly):
            if other.mode is not self.mode:
                raise ValueError("mixing derivation modes")
            return other
        return BiDiffPoly({(0, 0): other}, self.mode)

    def __add__(self, other: Any) -> BiDiffPoly:
        o = self._lift(other)
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out[k] + c if k in out else c
        return BiDiffPoly(out, self.mode)

    __radd__ = __add__

    def __neg__(self) -> BiDiffPoly:
        return BiDiffPoly({k: -c for k, c in self.terms.items()}, self.mode)

    def __sub__(self, other: Any) -> BiDiffPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other: Any) -> BiDiffPoly:
        return (-self) + other

    def __mul__(self, other: Any) -> BiDiffPoly:
        o = self._lift(other)
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return BiDiffPoly(out, self.mode)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BiDiffPoly:
        out = BiDiffPoly.const(1, self.mode)
        for _ in range(n):
            out = out * self
        return out

    def map_coeffs(self, fn) -> BiDiffPoly:
        return BiDiffPoly({k: fn(c) for k, c in self.terms.items()}, self.mode)

    def dY(self) -> BiDiffPoly:
        return BiDiffPoly({(i - 1, j): c * i for (i, j), c in self.terms.items() if i}, self.mode)

    def dZ(self) -> BiDiffPoly:
        return BiDiffPoly({(i, j - 1): c * j for (i, j), c in self.terms.items() if j}, self.mode)

    def evaluate(self, y: Any, z: Any) -> Any:
        total = as_scalar(0, self.mode)
        for (i, j), c in self.terms.items():
            total = total + c * y**i * z**j
        return total

    def as_poly_in_Z(self) -> Poly:
        """``f`` as a polynomial in ``Z`` whose coefficients are polynomials in ``Y``."""
        cols: dict[int, dict[int, Any]] = {}
        for (i, j), c in self.terms.items():
            cols.setdefault(j, {})[i] = c
        zero = as_scalar(0, self.mode)
        out = []
        for j in range(self.degree_Z + 1):
            col = cols.get(j, {})
            deg = max(col, default=-1)
            out.append(Poly([col.get(i, zero) for i in range(deg + 1)], "Y"))
        return Poly(out, "Z")

    # -- display ------------------------------------------------------------

    def format(self, names: tuple[str, str] = ("Y", "Z")) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda k: (k[0] + k[1], k[1], k[0])):
            c = self.terms[(i, j)]
            mono = "*".join(
                s
                for s in (
                    (names[0] if i == 1 else f"{names[0]}^{i}") if i else "",
                    (names[1] if j == 1 else f"{names[1]}^{j}") if j else "",
                )
                if s
            )
            neg = False
            if isinstance(c, RatFn) and c.is_constant():
                c = c.constant_value()
            if isinstance(c, Fraction):
                neg = c < 0
                mag = -c if neg else c
                cs = "" if (mag == 1 and mono) else str(mag)
            else:
                neg = c.num.lc < 0
                mag = -c if neg else c
                cs = f"({mag})"
            body = f"{cs}*{mono}" if cs and mono else (cs or mono)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"BiDiffPoly({self.format()}, mode={self.mode.value})"


# ---------------------------------------------------------------------------
# simple points and translation


@dataclass(frozen=True)
class TangentCheck:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def simple_point_tangent_Z(f: BiDiffPoly) -> TangentCheck:
    """Is the origin a simple point of ``f`` with tangent line ``Z = 0``?"""
    if f.coeff(0, 0):
        return TangentCheck(False, "origin is not on the curve: f(0,0) != 0")
    fz, fy = f.coeff(0, 1), f.coeff(1, 0)
    if not fz and not fy:
        return TangentCheck(False, "singular point: both partial derivatives vanish at the origin")
    if not fz:
        return TangentCheck(False, "tangent line is Y = 0, not Z = 0")
    if fy:
        return TangentCheck(False, f"tangent line is ({fy})*Y + ({fz})*Z, not Z = 0")
    return TangentCheck(True)


def translate(f: BiDiffPoly, y0: Any, z0: Any) -> BiDiffPoly:
    """``g(Y, Z) = f(Y + y0, Z + z0)``."""
    y0, z0 = as_scalar(y0, f.mode), as_scalar(z0, f.mode)
    out: dict = {}
    for (i, j), c in f.terms.items():
        for a in range(i + 1):
            ca = comb(i, a) * y0 ** (i - a)
            if not ca:
                continue
            for b in range(j + 1):
                cb = comb(j, b) * z0 ** (j - b)
                if not cb:
                    continue
                v = c * ca * cb
                out[(a, b)] = out[(a, b)] + v if (a, b) in out else v
    return BiDiffPoly(out, f.mode)


def scale(f: BiDiffPoly, c: Any) -> BiDiffPoly:
    c = as_scalar(c, f.mode)
    if not c:
        raise ValueError("scaling by zero")
    return f * c


def has_repeated_factor_in_Z(f: BiDiffPoly) -> bool:
    """True iff ``gcd(f, df/dZ)`` involves ``Z``.

    Decided exactly with ``Res_Z(f, df/dZ)`` over the field of fractions of
    the coefficient ring in ``Y``; the resultant vanishes iff the gcd is
    nontrivial.
    """
    if f.degree_Z < 1:
        raise PreconditionError("f does not involve Z")
    if f.degree_Z == 1:
        return False
    r = resultant(f.as_poly_in_Z(), f.dZ().as_poly_in_Z())
    return not r


# ---------------------------------------------------------------------------
# branch expansion


def _mul_trunc(a: list, b: list, n: int, zero: Any) -> list:
    out = [zero] * (n + 1)
    for i, ca in enumerate(a[: n + 1]):
        if not ca:
            continue
        for j, cb in enumerate(b[: n + 1 - i]):
            if cb:
                out[i + j] = out[i + j] + ca * cb
    return out


def substitute_branch(f: BiDiffPoly, z_series: list, n: int) -> list:
    """Coefficients of ``f(Y, sum z_series[i] Y^i)`` up to ``Y^n``."""
    zero = as_scalar(0, f.mode)
    one = as_scalar(1, f.mode)
    z = list(z_series[: n + 1]) + [zero] * max(0, n + 1 - len(z_series))
    powers = [[one] + [zero] * n]
    for _ in range(f.degree_Z):
        powers.append(_mul_trunc(powers[-1], z, n, zero))
    out = [zero] * (n + 1)
    for (i, j), c in f.terms.items():
        if i > n:
            continue
        pw = powers[j]
        for k in range(n + 1 - i):
            if pw[k]:
                out[i + k] = out[i + k] + c * pw[k]
    return out


@dataclass(frozen=True)
class BranchExpansion:
    """``Z = sum_{i=2}^{order} lambdas[i-2] * Y^i`` modulo ``Y^(order+1)``."""

    lambdas: tuple
    order: int

    def coefficient(self, i: int) -> Any:
        if i < 2 or i > self.order:
            raise IndexError(i)
        return self.lambdas[i - 2]

    @property
    def lambda2(self) -> Any:
        return self.lambdas[0]

    @property
    def lambda3(self) -> Any:
        return self.lambdas[1]

    def z_series(self) -> list:
        zero = self.lambdas[0] * 0
        return [zero, zero, *self.lambdas]


def branch_expand(f: BiDiffPoly, order: int = 3) -> BranchExpansion:
    """Y-adic expansion of the branch of ``f`` through the origin.

    Each coefficient is fixed by one linear equation whose leading
    coefficient is ``df/dZ(0,0)``, nonzero at a simple point.
    """
    if order < 3:
        raise ValueError("order must be at least 3")
    check = simple_point_tangent_Z(f)
    if not check:
        raise PreconditionError(check.reason)
    fz = f.coeff(0, 1)
    zero = as_scalar(0, f.mode)
    z = [zero, zero]
    for n in range(2, order + 1):
        c = substitute_branch(f, z + [zero], n)[n]
        z.append(-c / fz)
    residual = substitute_branch(f, z, order)
    assert not any(residual), "branch residual does not vanish"
    return BranchExpansion(tuple(z[2:]), order)


def branch_residual_vanishes(f: BiDiffPoly, branch: BranchExpansion) -> bool:
    return not any(substitute_branch(f, branch.z_series(), branch.order))


def monomials_from(terms: Iterable[tuple[int, int, Any]], mode=DerivationMode.CONST) -> BiDiffPoly:
    """Build ``sum c * Y^i * Z^j`` from ``(i, j, c)`` triples."""
    out: dict = {}
    for i, j, c in terms:
        c = as_scalar(c, DerivationMode(mode))
        out[(i, j)] = out[(i, j)] + c if (i, j) in out else c
    return BiDiffPoly(out, mode)
