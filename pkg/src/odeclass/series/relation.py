"""Bounded search for polynomial relations among truncated series.

A relation is ``sum c_{alpha,j} x^j u^alpha = 0`` with ``|alpha| <= d`` and
``j <= dx``.  Matching coefficients of ``x^0 .. x^(N-1)`` gives a linear
system over Q; a nonzero nullspace vector is a candidate, accepted only if it
still vanishes on longer series.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .nullspace import nullspace
from .truncated import TruncSeries

SAFETY_MARGIN = 10

Column = tuple[tuple[int, ...], int]


def exponent_vectors(k: int, d: int) -> list[tuple[int, ...]]:
    """All ``alpha`` in ``N^k`` with ``|alpha| <= d``, by degree then lexicographically."""
    vecs = [a for a in product(range(d + 1), repeat=k) if sum(a) <= d]
    return sorted(vecs, key=lambda a: (sum(a), a))


def relation_columns(k: int, d: int, dx: int) -> list[Column]:
    return [(a, j) for a in exponent_vectors(k, d) for j in range(dx + 1)]


class TruncationTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class Bounds:
    degree: int
    xdegree: int
    order: int


@dataclass(frozen=True)
class RelationCandidate:
    """Nonzero terms ``(alpha, j, coefficient)`` in column order; the first coefficient is 1."""

    terms: tuple[tuple[tuple[int, ...], int, Fraction], ...]
    nseries: int
    bounds: Bounds
    verified_order: int

    @property
    def total_degree(self) -> int:
        return max(sum(a) for a, _, _ in self.terms)

    def evaluate(self, series: Sequence[TruncSeries], order: int) -> TruncSeries:
        """The relation applied to ``series``, truncated to ``x^(order-1)``."""
        n = order - 1
        us = [s.truncate(n) for s in series]
        xs = TruncSeries.x(n)
        total = TruncSeries.const(0, n)
        for alpha, j, c in self.terms:
            mono = xs**j
            for u, e in zip(us, alpha):
                if e:
                    mono = mono * u**e
            total = total + mono * c
        return total

    def vanishes_on(self, series: Sequence[TruncSeries], order: int) -> bool:
        return self.evaluate(series, order).is_zero_to(order)

    def format(self, names: Sequence[str] | None = None) -> str:
        names = list(names or [f"u{i + 1}" for i in range(self.nseries)])
        parts = []
        for alpha, j, c in self.terms:
            factors = []
            if j:
                factors.append("x" if j == 1 else f"x^{j}")
            for name, e in zip(names, alpha):
                if e:
                    factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out + " = 0"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class RelationSearch:
    """Outcome of a bounded search; ``relation`` is None for NoneAtBounds."""

    relation: RelationCandidate | None
    bounds: Bounds
    nullity: int
    rejected: int = 0
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def found(self) -> bool:
        return self.relation is not None

    @property
    def tag(self) -> str:
        return "Found" if self.found else "NoneAtBounds"


def _monomial_series(series: Sequence[TruncSeries], alphas, n: int) -> dict:
    k = len(series)
    pw = [[TruncSeries.const(1, n)] for _ in range(k)]
    top = max((max(a) for a in alphas), default=0)
    for i in range(k):
        u = series[i].truncate(n)
        for _ in range(top):
            pw[i].append(pw[i][-1] * u)
    out = {}
    for a in alphas:
        m = TruncSeries.const(1, n)
        for i, e in enumerate(a):
            if e:
                m = m * pw[i][e]
        out[a] = m
    return out


def coefficient_matrix(series: Sequence[TruncSeries], columns: Sequence[Column], order: int) -> list[list[Fraction]]:
    """Row ``n`` holds ``[x^n] x^j u^alpha`` for each column, ``n < order``."""
    n = order - 1
    monos = _monomial_series(series, sorted({a for a, _ in columns}), n)
    rows = []
    for r in range(order):
        rows.append([monos[a][r - j] if r >= j else Fraction(0) for a, j in columns])
    return rows


def find_algebraic_relation(
    series: Sequence[TruncSeries],
    degree: int,
    xdegree: int = 0,
    order: int | None = None,
    regenerate: Callable[[int], Sequence[TruncSeries]] | None = None,
) -> RelationSearch:
    """Search for a relation of total degree ``<= degree`` and x-degree ``<= xdegree``.

    ``order`` (N) equations are used.  A candidate must then vanish to
    ``x^(2N)``; the longer series come from ``regenerate(2N)`` when given,
    otherwise the inputs must already be that long.
    """
    if not series:
        raise ValueError("need at least one series")
    if degree < 1 or xdegree < 0:
        raise ValueError("degree must be >= 1 and xdegree >= 0")
    available = min(s.order for s in series) + 1
    if order is None:
        order = available if regenerate else available // 2
    columns = relation_columns(len(series), degree, xdegree)
    if order < len(columns) + SAFETY_MARGIN:
        raise TruncationTooSmall(
            f"order {order} is below {len(columns)} unknowns + margin {SAFETY_MARGIN}"
        )
    if available < order:
        raise TruncationTooSmall(f"series are known to x^{available - 1}, need x^{order - 1}")
    bounds = Bounds(degree, xdegree, order)

    basis = nullspace(coefficient_matrix(series, columns, order), len(columns))
    if not basis:
        return RelationSearch(None, bounds, 0)

    check_order = 2 * order
    if regenerate is not None:
        longer = list(regenerate(check_order))
    else:
        longer = list(series)
    if min(s.order for s in longer) + 1 < check_order:
        raise TruncationTooSmall(f"re-verification needs series known to x^{check_order - 1}")

    rejected = 0
    for vec in basis:
        lead = next(c for c in vec if c)
        terms = tuple((a, j, c / lead) for (a, j), c in zip(columns, vec) if c)
        cand = RelationCandidate(terms, len(series), bounds, check_order)
        if cand.vanishes_on(longer, check_order):
            return RelationSearch(cand, bounds, len(basis), rejected)
        rejected += 1
    note = f"{rejected} truncation-level candidate(s) failed at order {check_order}"
    return RelationSearch(None, bounds, len(basis), rejected, (note,))
