"""Dense univariate polynomials with exact coefficients.

Coefficients are normally :class:`fractions.Fraction`. The arithmetic only
needs ``+ - *`` and truthiness from them, so a ``Poly`` may also carry
coefficients that are themselves polynomials (in a second variable) or
rational functions; the resultant code relies on this.

The zero polynomial has no coefficients and degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable


class VariableMismatch(ValueError):
    """Raised when two polynomials tagged with different variables meet."""


def _coerce(c: Any) -> Any:
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return c


def _strip(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _is_scalar(c: Any) -> bool:
    return isinstance(c, (int, Fraction)) and not isinstance(c, bool)


class Poly:
    """Immutable dense polynomial ``sum(coeffs[i] * var**i)``."""

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Iterable = (), var: str = "Y"):
        object.__setattr__(self, "coeffs", tuple(_strip([_coerce(c) for c in coeffs])))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, var: str = "Y") -> Poly:
        return cls((), var)

    @classmethod
    def one(cls, var: str = "Y") -> Poly:
        return cls((1,), var)

    @classmethod
    def const(cls, c: Any, var: str = "Y") -> Poly:
        return cls((c,), var)

    @classmethod
    def monomial(cls, degree: int, var: str = "Y", coeff: Any = 1) -> Poly:
        return cls([0] * degree + [coeff], var)

    @classmethod
    def gen(cls, var: str = "Y") -> Poly:
        return cls((0, 1), var)

    @classmethod
    def from_roots(cls, roots: Iterable, var: str = "Y") -> Poly:
        p = cls.one(var)
        for r in roots:
            p = p * cls((-_coerce(r), 1), var)
        return p

    # -- basic queries ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Any:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, i: int) -> Any:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Poly):
            if self.var != other.var and (len(self.coeffs) > 1 or len(other.coeffs) > 1):
                return False
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            if other == 0:
                return not self.coeffs
            return self.coeffs == (Fraction(other),)
        return NotImplemented

    def __hash__(self) -> int:
        if len(self.coeffs) == 0:
            return hash(0)
        if len(self.coeffs) == 1 and _is_scalar(self.coeffs[0]):
            return hash(self.coeffs[0])
        return hash((self.var, self.coeffs))

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other: Any) -> Poly:
        if isinstance(other, Poly):
            if other.var != self.var:
                # constants carry no variable information
                if other.is_constant():
                    return Poly(other.coeffs, self.var)
                if self.is_constant():
                    return other
                raise VariableMismatch(f"{self.var} vs {other.var}")
            return other
        return Poly((other,), self.var)

    def _with_var(self, other: Poly) -> str:
        if self.is_constant() and isinstance(other, Poly) and not other.is_constant():
            return other.var
        return self.var

    def __add__(self, other: Any) -> Poly:
        if getattr(other, "_absorbs_poly", False):
            return NotImplemented
        o = self._lift(other)
        var = self._with_var(o)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, var)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other: Any) -> Poly:
        if getattr(other, "_absorbs_poly", False):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other: Any) -> Poly:
        return (-self) + other

    def __mul__(self, other: Any) -> Poly:
        if getattr(other, "_absorbs_poly", False):
            return NotImplemented
        if not isinstance(other, Poly):
            other = _coerce(other)
            if not other:
                return Poly((), self.var)
            return Poly([c * other for c in self.coeffs], self.var)
        o = self._lift(other)
        var = self._with_var(o)
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly((), var)
        out: list = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly(out, var)

    def __rmul__(self, other: Any) -> Poly:
        if not isinstance(other, Poly):
            other = _coerce(other)
            if not other:
                return Poly((), self.var)
            return Poly([other * c for c in self.coeffs], self.var)
        return other.__mul__(self)

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: Any) -> tuple[Poly, Poly]:
        """Euclidean division; requires field coefficients."""
        o = self._lift(other)
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        var = self.var if not self.is_constant() else o.var
        r = list(self.coeffs)
        db = o.degree
        lb = o.lc
        q: list = [0] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            k = len(r) - 1 - db
            c = r[-1] / lb
            q[k] = c
            for i, cb in enumerate(o.coeffs):
                r[i + k] = r[i + k] - c * cb
            r.pop()
            _strip(r)
        return Poly(q, var), Poly(r, var)

    def __floordiv__(self, other: Any) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Any) -> Poly:
        return divmod(self, other)[1]

    def exquo(self, other: Any) -> Poly:
        """Exact quotient; raises ``ArithmeticError`` if a remainder is left."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __truediv__(self, other: Any) -> Poly:
        if getattr(other, "_absorbs_poly", False):
            return NotImplemented
        if isinstance(other, Poly):
            return self.exquo(other)
        other = _coerce(other)
        return Poly([c / other for c in self.coeffs], self.var)

    # -- calculus and evaluation -------------------------------------------

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        lc = self.lc
        return Poly([c / lc for c in self.coeffs], self.var)

    def derivative(self) -> Poly:
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def integral(self) -> Poly:
        """Antiderivative with zero constant term (field coefficients)."""
        return Poly([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)], self.var)

    def __call__(self, point: Any) -> Any:
        """Horner evaluation; ``point`` may be any ring element."""
        acc: Any = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose(self, inner: Poly) -> Poly:
        acc = Poly((), inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, a: Any) -> Poly:
        """Return ``p(var + a)``."""
        return self.compose(Poly((a, 1), self.var))

    def with_var(self, var: str) -> Poly:
        return Poly(self.coeffs, var)

    def map_coeffs(self, fn) -> Poly:
        return Poly([fn(c) for c in self.coeffs], self.var)

    # -- display ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]}, var={self.var!r})"

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: Poly, var: str | None = None) -> str:
    """Human-readable form that the expression parser reads back."""
    name = var or p.var
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
        if _is_scalar(c):
            neg = c < 0
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
        else:
            neg = False
            body = f"({c})*{mono}" if mono else f"({c})"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)
