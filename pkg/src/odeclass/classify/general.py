"""Sufficient criterion for general type and the Abel shortcut.

If the origin is a simple point of an irreducible ``f`` with tangent
``Z = 0`` and neither ``l2`` nor ``l3`` of the branch ``Z = l2*Y^2 +
l3*Y^3 + ...`` has an antiderivative, then ``f(y, y') = 0`` is of general
type. Failing the test proves nothing, hence ``Inconclusive``.

Irreducibility is not decided here. It is recorded as an unverified
hypothesis; the only check made is that ``f`` has no repeated factor in Z.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from ..curve import (
    BiDiffPoly,
    PreconditionError,
    branch_expand,
    has_repeated_factor_in_Z,
    simple_point_tangent_Z,
)
from ..ratcalc import Antiderivative, DerivationMode, as_scalar, has_antiderivative

HYPOTHESES = {
    "irreducibility_unverified": True,
    "antiderivative_over_closure_decided_over_base": True,
}


@dataclass(frozen=True)
class GeneralTypeCertificate:
    lambda2: Any
    lambda3: Any
    evidence2: Antiderivative
    evidence3: Antiderivative
    mode: DerivationMode
    hypotheses: dict = field(default_factory=lambda: dict(HYPOTHESES))


@dataclass(frozen=True)
class GeneralTypeResult:
    """``certified`` is True only when both coefficients lack antiderivatives."""

    certified: bool
    lambda2: Any
    lambda3: Any
    evidence2: Antiderivative
    evidence3: Antiderivative
    reason: str = ""
    certificate: GeneralTypeCertificate | None = None


def _verdict(l2: Any, l3: Any, mode: DerivationMode) -> GeneralTypeResult:
    e2 = has_antiderivative(l2, mode)
    e3 = has_antiderivative(l3, mode)
    if not e2.exists and not e3.exists:
        cert = GeneralTypeCertificate(l2, l3, e2, e3, mode)
        return GeneralTypeResult(True, l2, l3, e2, e3, "neither lambda2 nor lambda3 has an antiderivative", cert)
    which = [name for name, e in (("lambda2", e2), ("lambda3", e3)) if e.exists]
    return GeneralTypeResult(
        False, l2, l3, e2, e3, f"{' and '.join(which)} has an antiderivative; the criterion does not apply"
    )


def certify_general(f: BiDiffPoly) -> GeneralTypeResult:
    check = simple_point_tangent_Z(f)
    if not check:
        raise PreconditionError(check.reason)
    if has_repeated_factor_in_Z(f):
        raise PreconditionError("f has a repeated factor in Z, so it is not irreducible")
    branch = branch_expand(f, 3)
    return _verdict(branch.lambda2, branch.lambda3, f.mode)


def abel_polynomial(coeffs: Sequence[Any], mode: DerivationMode | str) -> BiDiffPoly:
    """``Z - sum(a_i Y^i)`` for ``coeffs = (a_2, a_3, ..., a_n)``."""
    mode = DerivationMode(mode)
    terms = {(0, 1): 1}
    for i, a in enumerate(coeffs, start=2):
        terms[(i, 0)] = -as_scalar(a, mode)
    return BiDiffPoly(terms, mode)


def classify_abel(coeffs: Sequence[Any], mode: DerivationMode | str) -> GeneralTypeResult:
    """``y' = a_n y^n + ... + a_2 y^2`` with ``coeffs = (a_2, ..., a_n)``, n >= 3.

    For this shape the branch coefficients are exactly ``l2 = a_2`` and
    ``l3 = a_3``.
    """
    if len(coeffs) < 2:
        raise ValueError("an Abel-type equation needs n >= 3 (coefficients a2 and a3)")
    mode = DerivationMode(mode)
    a2, a3 = (as_scalar(c, mode) for c in coeffs[:2])
    return _verdict(a2, a3, mode)
