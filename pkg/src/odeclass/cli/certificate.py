"""Certificate documents: a JSON tree whose exact values carry explicit types.

Typed leaves::

    {"$type": "rational", "value": "p/q"}
    {"$type": "poly", "var": v, "coeffs": ["c0", "c1", ...]}
    {"$type": "ratfn", "var": v, "num": [...], "den": [...]}
    {"$type": "bidiff", "mode": "const"|"qx", "terms": [[i, j, coeff], ...]}
    {"$type": "series", "coeffs": ["u0", "u1", ...]}

Polynomial and series coefficients are rational strings.  Serialization
uses sorted keys and fixed indentation, so encode(decode(text)) == text.
"""

from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction
from typing import Any

from .. import __version__
from ..curve import BiDiffPoly
from ..exactalg import Poly, RatFn
from ..ratcalc import DerivationMode
from ..series import TruncSeries

SCHEMA = "odeclass-certificate/1"
TOOL = "odeclass"


def _rat(c: Any) -> str:
    return str(Fraction(c))


def _poly_coeffs(p: Poly) -> list[str]:
    return [_rat(c) for c in p.coeffs]


def encode(value: Any) -> Any:
    """Plain JSON-ready tree for ``value``."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return {"$type": "rational", "value": _rat(value)}
    if isinstance(value, RatFn):
        return {"$type": "ratfn", "var": value.var, "num": _poly_coeffs(value.num), "den": _poly_coeffs(value.den)}
    if isinstance(value, Poly):
        return {"$type": "poly", "var": value.var, "coeffs": _poly_coeffs(value)}
    if isinstance(value, BiDiffPoly):
        terms = [[i, j, encode(value.terms[(i, j)])] for (i, j) in sorted(value.terms)]
        return {"$type": "bidiff", "mode": value.mode.value, "terms": terms}
    if isinstance(value, TruncSeries):
        return {"$type": "series", "coeffs": [_rat(c) for c in value.coeffs]}
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


def _poly(var: str, coeffs: list[str]) -> Poly:
    return Poly([Fraction(c) for c in coeffs], var)


def decode(tree: Any) -> Any:
    """Inverse of :func:`encode`: typed leaves become library objects."""
    if isinstance(tree, list):
        return [decode(v) for v in tree]
    if not isinstance(tree, dict):
        return tree
    kind = tree.get("$type")
    if kind is None:
        return {k: decode(v) for k, v in tree.items()}
    if kind == "rational":
        return Fraction(tree["value"])
    if kind == "poly":
        return _poly(tree["var"], tree["coeffs"])
    if kind == "ratfn":
        return RatFn(_poly(tree["var"], tree["num"]), _poly(tree["var"], tree["den"]))
    if kind == "bidiff":
        return BiDiffPoly({(i, j): decode(c) for i, j, c in tree["terms"]}, DerivationMode(tree["mode"]))
    if kind == "series":
        return TruncSeries(Fraction(c) for c in tree["coeffs"])
    raise ValueError(f"unknown $type {kind!r}")


def make_document(
    command: str,
    inputs: dict,
    verdict: str,
    evidence: dict,
    hypotheses: dict | None = None,
) -> dict:
    return {
        "schema": SCHEMA,
        "tool": {"name": TOOL, "version": __version__},
        "command": command,
        "input": inputs,
        "verdict": verdict,
        "evidence": evidence,
        "hypotheses": dict(hypotheses or {}),
    }


def dumps(doc: dict) -> str:
    """Serialize a document (library objects allowed anywhere in the tree)."""
    return json.dumps(encode(doc), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> dict:
    """Parse a document, turning typed leaves back into library objects."""
    return decode(json.loads(text))
