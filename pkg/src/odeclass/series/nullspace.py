"""Exact nullspace by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        row = [Fraction(c) for c in row]
        m = lcm(*(c.denominator for c in row)) if row else 1
        out.append([int(c * m) for c in row])
    return out


def echelon(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Integer row echelon form and pivot columns.

    Every division in the Bareiss update is exact: after step k the entries
    are (k+1)-minors of the input.
    """
    m = _integer_rows(rows)
    nrows = len(m)
    r = 0
    prev = 1
    pivots: list[int] = []
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        top = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            a = row[col]
            for j in range(col + 1, ncols):
                row[j] = (p * row[j] - a * top[j]) // prev
            row[col] = 0
        prev = p
        pivots.append(col)
        r += 1
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{v : A v = 0}``, one vector per free column in column order.

    The vector for free column ``f`` has ``v[f] = 1``, zeros on the other
    free columns, and is supported on columns ``<= f``.
    """
    ech, pivots = echelon(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in reversed(list(zip(ech, pivots))):
            s = sum((row[j] * v[j] for j in range(p + 1, ncols) if row[j] and v[j]), Fraction(0))
            v[p] = -s / row[p]
        basis.append(v)
    return basis
