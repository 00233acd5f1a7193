"""Truncated power series in ``x`` at 0 with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable

from ..exactalg import Poly, RatFn


class TruncSeries:
    """``u_0 + u_1 x + ... + u_N x^N + O(x^(N+1))``.

    Binary operations truncate to the smaller order; the derivative loses
    one order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any]):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def const(cls, c: Any, order: int) -> TruncSeries:
        return cls([c] + [0] * order)

    @classmethod
    def x(cls, order: int) -> TruncSeries:
        return cls([0, 1] + [0] * (order - 1)) if order >= 1 else cls([0])

    @classmethod
    def from_ratfn(cls, w: RatFn | Fraction | int, order: int) -> TruncSeries:
        """Taylor expansion at ``x = 0``; raises on a pole there."""
        if not isinstance(w, RatFn):
            return cls.const(w, order)
        num = cls.from_poly(w.num, order)
        den = cls.from_poly(w.den, order)
        if den.coeffs[0] == 0:
            raise ZeroDivisionError(f"{w} has a pole at x = 0")
        return num / den

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> TruncSeries:
        return cls([p.coeff(i) for i in range(order + 1)])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncSeries(self.coeffs[: order + 1])

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, TruncSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _lift(self, other: Any) -> TruncSeries:
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.const(other, self.order)

    def __add__(self, other: Any) -> TruncSeries:
        o = self._lift(other)
        n = min(self.order, o.order)
        return TruncSeries(a + b for a, b in zip(self.coeffs[: n + 1], o.coeffs[: n + 1]))

    __radd__ = __add__

    def __neg__(self) -> TruncSeries:
        return TruncSeries(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> TruncSeries:
        return self + (-self._lift(other))

    def __rsub__(self, other: Any) -> TruncSeries:
        return (-self) + other

    def __mul__(self, other: Any) -> TruncSeries:
        if not isinstance(other, TruncSeries):
            c = Fraction(other)
            return TruncSeries(c * a for a in self.coeffs)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            s = Fraction(0)
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    s += a[i] * b[k - i]
            out.append(s)
        return TruncSeries(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> TruncSeries:
        out = TruncSeries.const(1, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def reciprocal(self) -> TruncSeries:
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [1 / a[0]]
        for k in range(1, len(a)):
            s = sum((a[i] * inv[k - i] for i in range(1, k + 1) if a[i]), Fraction(0))
            inv.append(-s / a[0])
        return TruncSeries(inv)

    def __truediv__(self, other: Any) -> TruncSeries:
        if not isinstance(other, TruncSeries):
            return self * (1 / Fraction(other))
        n = min(self.order, other.order)
        return self.truncate(n) * other.truncate(n).reciprocal()

    def derivative(self) -> TruncSeries:
        if self.order == 0:
            raise ValueError("derivative of an order-0 series is unknown")
        return TruncSeries(i * c for i, c in enumerate(self.coeffs) if i)

    def apply(self, w: Poly | RatFn) -> TruncSeries:
        """``w(self)`` for a polynomial or rational function ``w``."""
        if isinstance(w, RatFn):
            return self.apply(w.num) / self.apply(w.den)
        acc = TruncSeries.const(0, self.order)
        for c in reversed(w.coeffs):
            acc = acc * self + c
        return acc

    def is_zero_to(self, n: int) -> bool:
        """All coefficients of ``x^0 .. x^(n-1)`` vanish."""
        return not any(self.coeffs[:n])

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        more = ", ..." if len(self.coeffs) > 6 else ""
        return f"TruncSeries([{shown}{more}], order={self.order})"
