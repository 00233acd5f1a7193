"""Verdict engines for first-order equations."""

from .autonomous import AutonomousVerdict, AutoType, classify_autonomous
from .general import (
    GeneralTypeCertificate,
    GeneralTypeResult,
    abel_polynomial,
    certify_general,
    classify_abel,
)
from .riccati import RiccatiCoeffs, SingularMatrix, inverse_matrix, mobius_riccati, riccati_form
from .weierstrass import (
    DegenerateCurve,
    WeierstrassData,
    discriminant_term,
    iso_over_kbar,
    j_invariant,
    weierstrass_validate,
)

__all__ = [
    "AutoType",
    "AutonomousVerdict",
    "DegenerateCurve",
    "GeneralTypeCertificate",
    "GeneralTypeResult",
    "RiccatiCoeffs",
    "SingularMatrix",
    "WeierstrassData",
    "abel_polynomial",
    "certify_general",
    "classify_abel",
    "classify_autonomous",
    "discriminant_term",
    "inverse_matrix",
    "iso_over_kbar",
    "j_invariant",
    "mobius_riccati",
    "riccati_form",
    "weierstrass_validate",
]
