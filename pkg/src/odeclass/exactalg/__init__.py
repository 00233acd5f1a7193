"""Exact scalar, polynomial and rational-function arithmetic over Q.

Scalars are :class:`fractions.Fraction`; there is no floating point here.
"""

from fractions import Fraction

from .algorithms import (
    PartialFractions,
    QFactorization,
    SqfDecomp,
    ext_euclid,
    factor_squarefree,
    int_primitive,
    is_squarefree,
    partial_fractions,
    poly_gcd,
    rational_roots,
    resultant,
    solve_bezout,
    squarefree_decompose,
    squarefree_part,
)
from .poly import Poly, VariableMismatch, format_poly
from .ratfn import RatFn

BigRat = Fraction

__all__ = [
    "BigRat",
    "Fraction",
    "PartialFractions",
    "Poly",
    "QFactorization",
    "RatFn",
    "SqfDecomp",
    "VariableMismatch",
    "ext_euclid",
    "factor_squarefree",
    "format_poly",
    "int_primitive",
    "is_squarefree",
    "partial_fractions",
    "poly_gcd",
    "rational_roots",
    "resultant",
    "solve_bezout",
    "squarefree_decompose",
    "squarefree_part",
]
