"""Evaluation of parsed expressions into the algebraic types of the library."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from ..curve import BiDiffPoly
from ..exactalg import RatFn
from ..ratcalc import DerivationMode
from .parser import Expr, Neg, Num, Pow, Var, parse, variables


class InputError(ValueError):
    """A well-formed expression that does not fit the requested reading."""

    def __init__(self, message: str, offset: int = -1):
        where = f" at offset {offset}" if offset >= 0 else ""
        super().__init__(f"{message}{where}")
        self.offset = offset


def _integer_exponent(e: Expr) -> int:
    v = eval_constant(e)
    if v.denominator != 1:
        raise InputError(f"exponent {v} is not an integer", e.pos)
    return int(v)


def _evaluate(e: Expr, dom) -> Any:
    if isinstance(e, Num):
        return dom.const(Fraction(e.value))
    if isinstance(e, Var):
        return dom.var(e.name, e.pos)
    if isinstance(e, Neg):
        return -_evaluate(e.operand, dom)
    if isinstance(e, Pow):
        return dom.pow(_evaluate(e.base, dom), _integer_exponent(e.exponent), e.pos)
    left, right = _evaluate(e.left, dom), _evaluate(e.right, dom)
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    if e.op == "*":
        return left * right
    return dom.div(left, right, e.pos)


class _ConstDomain:
    def const(self, c):
        return c

    def var(self, name, pos):
        raise InputError("expected a constant", pos)

    def pow(self, b, n, pos):
        if b == 0 and n < 0:
            raise InputError("zero to a negative power", pos)
        return b**n

    def div(self, a, b, pos):
        if b == 0:
            raise InputError("division by zero", pos)
        return a / b


def eval_constant(e: Expr) -> Fraction:
    return _evaluate(e, _ConstDomain())


class _RatFnDomain:
    def __init__(self, var: str):
        self.name = var

    def const(self, c):
        return RatFn.const(c, self.name)

    def var(self, name, pos):
        shown = "y'" if name == "z" else name
        if name != self.name:
            raise InputError(f"variable {shown} is not allowed here (expected {self.name} only)", pos)
        return RatFn.gen(self.name)

    def pow(self, b, n, pos):
        if not b and n < 0:
            raise InputError("zero to a negative power", pos)
        return b**n

    def div(self, a, b, pos):
        if not b:
            raise InputError("division by zero", pos)
        return a / b


def to_ratfn(e: Expr | str, var: str) -> RatFn:
    """Read an expression in the single variable ``var`` ("x" or "y")."""
    if isinstance(e, str):
        e = parse(e)
    return _evaluate(e, _RatFnDomain(var))


class _Affine:
    """``a * y' + b`` with ``a, b`` rational functions of ``y``."""

    __slots__ = ("a", "b")

    def __init__(self, a: RatFn, b: RatFn):
        self.a, self.b = a, b

    def __add__(self, o):
        return _Affine(self.a + o.a, self.b + o.b)

    def __sub__(self, o):
        return _Affine(self.a - o.a, self.b - o.b)

    def __neg__(self):
        return _Affine(-self.a, -self.b)

    def __mul__(self, o):
        if self.a and o.a:
            raise InputError("the equation is not linear in y'")
        return _Affine(self.a * o.b + self.b * o.a, self.b * o.b)


class _AffineDomain:
    def const(self, c):
        return _Affine(RatFn.const(0, "y"), RatFn.const(c, "y"))

    def var(self, name, pos):
        if name == "x":
            raise InputError("an autonomous equation cannot involve x", pos)
        if name == "z":
            return _Affine(RatFn.const(1, "y"), RatFn.const(0, "y"))
        return _Affine(RatFn.const(0, "y"), RatFn.gen("y"))

    def pow(self, b, n, pos):
        if b.a:
            if n == 1:
                return b
            if n == 0:
                return self.const(Fraction(1))
            raise InputError("the equation is not linear in y'", pos)
        if not b.b and n < 0:
            raise InputError("zero to a negative power", pos)
        return _Affine(b.a, b.b**n)

    def div(self, p, q, pos):
        if q.a:
            raise InputError("y' may not appear in a denominator", pos)
        if not q.b:
            raise InputError("division by zero", pos)
        return _Affine(p.a / q.b, p.b / q.b)


def autonomous_h(e: Expr | str) -> RatFn:
    """``h`` from either ``h(y)`` or an equation ``a(y) y' + b(y)`` (read as ``= 0``)."""
    if isinstance(e, str):
        e = parse(e)
    val = _evaluate(e, _AffineDomain())
    if "z" not in variables(e):
        return val.b
    if not val.a:
        raise InputError("y' cancels out of the equation")
    return -val.b / val.a


class _BiDiffDomain:
    mode = DerivationMode.QX

    def const(self, c):
        return BiDiffPoly.const(c, self.mode)

    def var(self, name, pos):
        if name == "x":
            return BiDiffPoly.const(RatFn.gen("x"), self.mode)
        if name == "y":
            return BiDiffPoly.Y(self.mode)
        return BiDiffPoly.Z(self.mode)

    @staticmethod
    def _scalar(p: BiDiffPoly, pos: int, what: str):
        if any(k != (0, 0) for k in p.terms):
            raise InputError(f"{what} may involve only x and constants", pos)
        return p.coeff(0, 0)

    def pow(self, b, n, pos):
        if n >= 0:
            return b**n
        c = self._scalar(b, pos, "a base with negative exponent")
        if not c:
            raise InputError("zero to a negative power", pos)
        return BiDiffPoly.const(c**n, self.mode)

    def div(self, p, q, pos):
        c = self._scalar(q, pos, "a denominator")
        if not c:
            raise InputError("division by zero", pos)
        return p * BiDiffPoly.const(1 / c, self.mode)


def to_curve(e: Expr | str) -> BiDiffPoly:
    """Polynomial ``f(Y, Z)`` with coefficients in ``Q(x)``.

    The mode is ``QX`` when a coefficient depends on ``x``, else ``CONST``.
    """
    if isinstance(e, str):
        e = parse(e)
    f = _evaluate(e, _BiDiffDomain())
    if all(c.is_constant() for c in f.terms.values()):
        return BiDiffPoly({k: c.constant_value() for k, c in f.terms.items()}, DerivationMode.CONST)
    return f


def parse_rational(text: str) -> Fraction:
    """A rational literal such as ``-3/4`` (the only number syntax in I/O)."""
    try:
        return eval_constant(parse(text.strip()))
    except InputError as exc:
        raise InputError(f"{text!r} is not a rational number: {exc}") from None


def coefficient(text: str, mode: DerivationMode) -> Any:
    """A scalar of the coefficient field: a rational, or a rational function of x in QX mode."""
    if mode is DerivationMode.QX:
        return to_ratfn(text, "x")
    return parse_rational(text)

