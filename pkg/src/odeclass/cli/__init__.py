"""Expression syntax, certificates and the command-line interface."""

from .certificate import SCHEMA, decode, dumps, encode, loads, make_document
from .convert import InputError, autonomous_h, parse_rational, to_curve, to_ratfn
from .main import build_parser, main
from .parser import BinOp, Neg, Num, ParseError, Pow, Var, parse, to_text, tokenize

__all__ = [
    "SCHEMA",
    "BinOp",
    "InputError",
    "Neg",
    "Num",
    "ParseError",
    "Pow",
    "Var",
    "autonomous_h",
    "build_parser",
    "decode",
    "dumps",
    "encode",
    "loads",
    "main",
    "make_document",
    "parse",
    "parse_rational",
    "to_curve",
    "to_ratfn",
    "to_text",
    "tokenize",
]
