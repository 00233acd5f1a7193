"""Canonical rational functions in one variable over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .algorithms import poly_gcd
from .poly import Poly, VariableMismatch, _is_scalar


class RatFn:
    """Quotient ``num/den`` kept reduced with a monic denominator.

    Instances are immutable and hashable. Scalars (``int``/``Fraction``)
    mix freely with rational functions in arithmetic and comparisons.
    """

    __slots__ = ("num", "den")
    _absorbs_poly = True

    def __init__(self, num: Any, den: Any = None, var: str | None = None):
        if not isinstance(num, Poly):
            num = Poly.const(num, var or (den.var if isinstance(den, Poly) else "x"))
        if den is None:
            den = Poly.one(num.var)
        elif not isinstance(den, Poly):
            den = Poly.const(den, num.var)
        if var is None:
            var = den.var if num.is_constant() and not den.is_constant() else num.var
        if num.var != den.var and not (num.is_constant() or den.is_constant()):
            raise VariableMismatch(f"{num.var} vs {den.var}")
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        num, den = num.with_var(var), den.with_var(var)
        if not num:
            den = Poly.one(var)
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exquo(g), den.exquo(g)
        lc = den.lc
        if lc != 1:
            num, den = num / lc, den / lc
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        assert den.lc == 1 and (den.degree == 0 or poly_gcd(num, den).degree == 0)

    def __setattr__(self, name, value):
        raise AttributeError("RatFn is immutable")

    @classmethod
    def const(cls, c: Any, var: str = "x") -> RatFn:
        return cls(Poly.const(c, var))

    @classmethod
    def gen(cls, var: str = "x") -> RatFn:
        return cls(Poly.gen(var))

    @property
    def var(self) -> str:
        return self.num.var

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(self.num.coeff(0))

    def is_proper(self) -> bool:
        return self.num.degree < self.den.degree

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other: Any) -> RatFn:
        if isinstance(other, RatFn):
            if other.var != self.var and not (other.is_constant() or self.is_constant()):
                raise VariableMismatch(f"{self.var} vs {other.var}")
            return other
        if isinstance(other, Poly):
            return RatFn(other)
        if _is_scalar(other):
            return RatFn(Poly.const(other, self.var))
        return NotImplemented

    def _pick_var(self, other: RatFn) -> str:
        return other.var if self.is_constant() else self.var

    def __add__(self, other: Any) -> RatFn:
        o = self._lift(other)
        if o is NotImplemented:
            return o
        var = self._pick_var(o)
        if self.den == o.den:
            return RatFn(self.num + o.num, self.den, var)
        return RatFn(self.num * o.den + o.num * self.den, self.den * o.den, var)

    __radd__ = __add__

    def __neg__(self) -> RatFn:
        return RatFn(-self.num, self.den)

    def __sub__(self, other: Any) -> RatFn:
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other: Any) -> RatFn:
        return (-self) + other

    def __mul__(self, other: Any) -> RatFn:
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RatFn(self.num * o.num, self.den * o.den, self._pick_var(o))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> RatFn:
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not o:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFn(self.num * o.den, self.den * o.num, self._pick_var(o))

    def __rtruediv__(self, other: Any) -> RatFn:
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, n: int) -> RatFn:
        if n >= 0:
            return RatFn(self.num**n, self.den**n)
        if not self:
            raise ZeroDivisionError("negative power of zero")
        return RatFn(self.den ** (-n), self.num ** (-n))

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, RatFn):
            if self.is_constant() and other.is_constant():
                return self.num.coeff(0) == other.num.coeff(0)
            return self.var == other.var and self.num == other.num and self.den == other.den
        if isinstance(other, Poly):
            return self == RatFn(other)
        if _is_scalar(other):
            return self.is_constant() and self.num.coeff(0) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.num.coeff(0))
        return hash((self.var, self.num.coeffs, self.den.coeffs))

    # -- calculus -----------------------------------------------------------

    def derive(self) -> RatFn:
        """Derivative with respect to the function's own variable."""
        n, d = self.num, self.den
        return RatFn(n.derivative() * d - n * d.derivative(), d * d, self.var)

    def __call__(self, point: Any) -> Any:
        dv = self.den(point)
        if not dv:
            raise ZeroDivisionError(f"pole of {self} at {point}")
        return self.num(point) / dv

    def substitute(self, inner: RatFn) -> RatFn:
        """Composition ``self(inner)``."""
        acc_n = RatFn.const(0, inner.var)
        for c in reversed(self.num.coeffs):
            acc_n = acc_n * inner + c
        acc_d = RatFn.const(0, inner.var)
        for c in reversed(self.den.coeffs):
            acc_d = acc_d * inner + c
        return acc_n / acc_d

    def shift(self, a: Any) -> RatFn:
        """Return ``w(var + a)``."""
        return RatFn(self.num.shift(a), self.den.shift(a), self.var)

    def with_var(self, var: str) -> RatFn:
        return RatFn(self.num.with_var(var), self.den.with_var(var), var)

    # -- display ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"RatFn({self})"

    def __str__(self) -> str:
        n = str(self.num)
        if self.den.degree == 0:
            return n
        d = str(self.den)
        if sum(1 for c in self.num.coeffs if c) > 1:
            n = f"({n})"
        if sum(1 for c in self.den.coeffs if c) > 1:
            d = f"({d})"
        return f"{n}/{d}"
