"""Expression syntax for equations ``f(x, y, y') = 0``.

Grammar (binary operators left-associative, ``^`` right-associative)::

    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := '-' unary | power
    power    := atom ('^' exponent)?
    exponent := '-' exponent | power
    atom     := INT | 'x' | 'y' | "y'" | 'z' | '(' expr ')'

``z`` is an alias for ``y'``.  There is no unary plus and no decimal
notation; rationals are written as quotients of integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

VARIABLES = {"x": "x", "y": "y", "z": "z"}


class ParseError(ValueError):
    """Lexical, syntax or identifier error at a byte offset of the input."""

    def __init__(self, kind: str, offset: int, message: str):
        super().__init__(f"{kind} error at offset {offset}: {message}")
        self.kind = kind
        self.offset = offset
        self.message = message


# -- AST ---------------------------------------------------------------------
# ``pos`` is the byte offset of the node in the source; it does not take part
# in equality, so parse(print(e)) == e compares structure only.


@dataclass(frozen=True)
class Num:
    value: int
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Var:
    name: str  # "x", "y" or "z" (= y')
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: "Expr"
    pos: int = field(default=-1, compare=False)


Expr = Union[Num, Var, Neg, BinOp, Pow]


# -- lexer -------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "var", "op", "end"
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    raw = text.encode("utf-8")
    toks = []
    i = 0
    n = len(raw)
    while i < n:
        ch = chr(raw[i]) if raw[i] < 128 else None
        if ch is not None and ch.isspace():
            i += 1
        elif ch is not None and ch.isdigit():
            j = i
            while j < n and chr(raw[j]).isdigit():
                j += 1
            toks.append(Token("int", raw[i:j].decode(), i))
            i = j
        elif ch is not None and (ch.isalpha() or ch == "_"):
            j = i
            while j < n and raw[j] < 128 and (chr(raw[j]).isalnum() or raw[j] == ord("_")):
                j += 1
            word = raw[i:j].decode()
            if word not in VARIABLES:
                raise ParseError("identifier", i, f"unknown identifier {word!r}")
            if word == "y" and j < n and raw[j] == ord("'"):
                toks.append(Token("var", "y'", i))
                j += 1
            else:
                toks.append(Token("var", word, i))
            i = j
        elif ch is not None and ch in "+-*/^()":
            toks.append(Token("op", ch, i))
            i += 1
        else:
            bad = raw[i:].decode("utf-8", errors="replace")[:1]
            raise ParseError("lexical", i, f"unexpected character {bad!r}")
    toks.append(Token("end", "", n))
    return toks


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def at_op(self, *ops: str) -> bool:
        t = self.peek()
        return t.kind == "op" and t.text in ops

    def parse(self) -> Expr:
        if self.peek().kind == "end":
            raise ParseError("syntax", self.peek().offset, "empty expression")
        e = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError("syntax", t.offset, f"unexpected {t.text!r}")
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.at_op("+", "-"):
            op = self.take()
            left = BinOp(op.text, left, self.term_after(op), op.offset)
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.at_op("*", "/"):
            op = self.take()
            self.require_operand(op)
            left = BinOp(op.text, left, self.unary(), op.offset)
        return left

    def term_after(self, op: Token) -> Expr:
        self.require_operand(op)
        return self.term()

    def require_operand(self, op: Token) -> None:
        t = self.peek()
        if t.kind in ("int", "var") or (t.kind == "op" and t.text in "(-"):
            return
        raise ParseError("syntax", op.offset, f"missing operand after {op.text!r}")

    def unary(self) -> Expr:
        if self.at_op("-"):
            op = self.take()
            self.require_operand(op)
            return Neg(self.unary(), op.offset)
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.at_op("^"):
            op = self.take()
            self.require_operand(op)
            return Pow(base, self.exponent(), op.offset)
        return base

    def exponent(self) -> Expr:
        if self.at_op("-"):
            op = self.take()
            self.require_operand(op)
            return Neg(self.exponent(), op.offset)
        return self.power()

    def atom(self) -> Expr:
        t = self.take()
        if t.kind == "int":
            return Num(int(t.text), t.offset)
        if t.kind == "var":
            return Var("z" if t.text == "y'" else t.text, t.offset)
        if t.kind == "op" and t.text == "(":
            if self.at_op(")"):
                raise ParseError("syntax", self.peek().offset, "empty parentheses")
            e = self.expr()
            close = self.peek()
            if not (close.kind == "op" and close.text == ")"):
                raise ParseError("syntax", close.offset, "expected ')'")
            self.take()
            return e
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError("syntax", t.offset, f"unexpected {what}")


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# -- printer -----------------------------------------------------------------


def _wrap(s: str, cond: bool) -> str:
    return f"({s})" if cond else s


def to_text(e: Expr) -> str:
    """Canonical text; ``parse(to_text(e)) == e`` for every AST ``e``."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return "y'" if e.name == "z" else e.name
    if isinstance(e, Neg):
        return "-" + _wrap(to_text(e.operand), isinstance(e.operand, BinOp))
    if isinstance(e, Pow):
        base = _wrap(to_text(e.base), not isinstance(e.base, (Num, Var)))
        exp = _wrap(to_text(e.exponent), isinstance(e.exponent, BinOp))
        return f"{base}^{exp}"
    if isinstance(e, BinOp):
        left, right = to_text(e.left), to_text(e.right)
        if e.op in "+-":
            right = _wrap(right, isinstance(e.right, BinOp) and e.right.op in "+-")
        else:
            left = _wrap(left, isinstance(e.left, BinOp) and e.left.op in "+-")
            right = _wrap(right, isinstance(e.right, BinOp))
        return f"{left} {e.op} {right}"
    raise TypeError(f"not an expression node: {e!r}")


def variables(e: Expr) -> set[str]:
    if isinstance(e, Var):
        return {e.name}
    if isinstance(e, Num):
        return set()
    if isinstance(e, Neg):
        return variables(e.operand)
    if isinstance(e, Pow):
        return variables(e.base) | variables(e.exponent)
    return variables(e.left) | variables(e.right)
