"""Riccati equations ``t' = a2 t^2 + a1 t + a0`` and their Moebius transforms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from ..curve import BiDiffPoly
from ..ratcalc import DerivationMode, as_scalar, derive_scalar


class SingularMatrix(ValueError):
    pass


@dataclass(frozen=True)
class RiccatiCoeffs:
    a2: Any
    a1: Any
    a0: Any
    mode: DerivationMode = DerivationMode.CONST

    def __post_init__(self):
        mode = DerivationMode(self.mode)
        object.__setattr__(self, "mode", mode)
        for name in ("a2", "a1", "a0"):
            object.__setattr__(self, name, as_scalar(getattr(self, name), mode))
        if not (self.a2 or self.a1 or self.a0):
            raise ValueError("Riccati coefficients are all zero")

    def as_tuple(self) -> tuple:
        return (self.a2, self.a1, self.a0)

    def rhs(self, t: Any) -> Any:
        return self.a2 * t * t + self.a1 * t + self.a0

    def to_curve(self) -> BiDiffPoly:
        """``Z - (a2 Y^2 + a1 Y + a0)``."""
        return BiDiffPoly({(0, 1): 1, (2, 0): -self.a2, (1, 0): -self.a1, (0, 0): -self.a0}, self.mode)


def _solve3(m: list[list[Any]], rhs: list[Any]) -> list[Any]:
    n = 3
    a = [row[:] + [r] for row, r in zip(m, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _infer_mode(values: Sequence[Any]) -> DerivationMode:
    from ..exactalg import RatFn

    if any(isinstance(v, RatFn) and not v.is_constant() for v in values):
        return DerivationMode.QX
    return DerivationMode.CONST


def mobius_riccati(r: RiccatiCoeffs, M: Sequence[Any]) -> RiccatiCoeffs:
    """Coefficients of the Riccati equation met by ``y = (a t + b)/(c t + d)``.

    ``M = (a, b, c, d)`` with ``ad - bc != 0``. Differentiating ``y`` gives
    ``y' (ct+d)^2 = (a'c - ac') t^2 + (a'd + b'c - bc' - ad') t + (b'd - bd')
    + (ad - bc) t'``, a quadratic in ``t`` once ``t'`` is substituted; it is
    re-expressed in the basis ``(at+b)^2, (at+b)(ct+d), (ct+d)^2``.
    """
    if len(M) != 4:
        raise ValueError("matrix must be given as (a, b, c, d)")
    mode = r.mode
    if mode is DerivationMode.CONST and _infer_mode(M) is DerivationMode.QX:
        mode = DerivationMode.QX
        r = RiccatiCoeffs(*r.as_tuple(), mode=mode)
    a, b, c, d = (as_scalar(v, mode) for v in M)
    det = a * d - b * c
    if not det:
        raise SingularMatrix("ad - bc = 0")
    da, db, dc, dd = (derive_scalar(v) for v in (a, b, c, d))
    # coefficient vectors indexed (t^2, t^1, t^0)
    p = [
        da * c - a * dc + det * r.a2,
        da * d + db * c - b * dc - a * dd + det * r.a1,
        db * d - b * dd + det * r.a0,
    ]
    basis = [
        [a * a, 2 * a * b, b * b],
        [a * c, a * d + b * c, b * d],
        [c * c, 2 * c * d, d * d],
    ]
    columns = [[basis[k][row] for k in range(3)] for row in range(3)]
    A2, A1, A0 = _solve3(columns, p)
    return RiccatiCoeffs(A2, A1, A0, mode)


def inverse_matrix(M: Sequence[Any]) -> tuple:
    """A matrix for the inverse Moebius map (scaling is irrelevant)."""
    a, b, c, d = M
    return (d, -b, -c, a)


def riccati_form(f: BiDiffPoly) -> RiccatiCoeffs | None:
    """Recognise ``c Z + q(Y)`` with ``deg q <= 2`` and ``c`` free of Y.

    Returns the coefficients of ``y' = -q(y)/c`` or None.
    """
    if f.degree_Z != 1:
        return None
    c = f.coeff(0, 1)
    for (i, j) in f.terms:
        if j == 1 and i > 0:
            return None
        if j == 0 and i > 2:
            return None
    if not c:
        return None
    try:
        return RiccatiCoeffs(-f.coeff(2, 0) / c, -f.coeff(1, 0) / c, -f.coeff(0, 0) / c, f.mode)
    except ValueError:
        return None
