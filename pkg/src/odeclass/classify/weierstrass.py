"""Weierstrass equations ``(t')^2 = alpha^2 (4 t^3 - g2 t - g3)``.

Only validation and comparison: nothing here detects Weierstrass type from
an arbitrary equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..curve import BiDiffPoly
from ..ratcalc import DerivationMode, as_scalar


class DegenerateCurve(ValueError):
    """Raised when ``27 g3^2 - g2^3 = 0``."""


def discriminant_term(g2: Fraction, g3: Fraction) -> Fraction:
    return 27 * Fraction(g3) ** 2 - Fraction(g2) ** 3


def weierstrass_validate(g2: Any, g3: Any) -> bool:
    return discriminant_term(g2, g3) != 0


def j_invariant(g2: Any, g3: Any) -> Fraction:
    g2, g3 = Fraction(g2), Fraction(g3)
    if not weierstrass_validate(g2, g3):
        raise DegenerateCurve(f"27*g3^2 - g2^3 = 0 for g2={g2}, g3={g3}")
    return 1728 * g2**3 / (g2**3 - 27 * g3**2)


def iso_over_kbar(c1: tuple[Any, Any], c2: tuple[Any, Any]) -> bool:
    return j_invariant(*c1) == j_invariant(*c2)


@dataclass(frozen=True)
class WeierstrassData:
    g2: Fraction
    g3: Fraction
    alpha: Any = Fraction(1)
    mode: DerivationMode = DerivationMode.CONST

    def __post_init__(self):
        object.__setattr__(self, "g2", Fraction(self.g2))
        object.__setattr__(self, "g3", Fraction(self.g3))
        mode = DerivationMode(self.mode)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "alpha", as_scalar(self.alpha, mode))
        if not self.alpha:
            raise ValueError("alpha must be nonzero")
        if not weierstrass_validate(self.g2, self.g3):
            raise DegenerateCurve("27*g3^2 - g2^3 = 0")

    @property
    def j(self) -> Fraction:
        return j_invariant(self.g2, self.g3)

    def to_curve(self) -> BiDiffPoly:
        """``Z^2 - alpha^2 (4 Y^3 - g2 Y - g3)``."""
        a2 = self.alpha * self.alpha
        return BiDiffPoly(
            {(0, 2): 1, (3, 0): -4 * a2, (1, 0): a2 * self.g2, (0, 0): a2 * self.g3},
            self.mode,
        )
