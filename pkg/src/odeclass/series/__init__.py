"""Truncated series solutions and the bounded algebraic-dependence tester."""

from .nullspace import echelon, nullspace
from .relation import (
    SAFETY_MARGIN,
    Bounds,
    RelationCandidate,
    RelationSearch,
    TruncationTooSmall,
    coefficient_matrix,
    exponent_vectors,
    find_algebraic_relation,
    relation_columns,
)
from .solve import autonomous_rhs, curve_residual, solve_series_autonomous, solve_series_curve
from .truncated import TruncSeries

__all__ = [
    "SAFETY_MARGIN",
    "Bounds",
    "RelationCandidate",
    "RelationSearch",
    "TruncSeries",
    "TruncationTooSmall",
    "autonomous_rhs",
    "coefficient_matrix",
    "curve_residual",
    "echelon",
    "exponent_vectors",
    "find_algebraic_relation",
    "nullspace",
    "relation_columns",
    "solve_series_autonomous",
    "solve_series_curve",
]
