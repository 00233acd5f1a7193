"""Classification of rational autonomous equations ``y' = h(y)``.

With ``w = 1/h`` the equation is of

* exact type when ``w`` has no residues (``t = integral(w)`` has ``t' = 1``);
* exponential type when ``w`` has only simple poles, no polynomial part and
  commensurable residues (``w = c * g'/g``);
* general type otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from ..exactalg import Poly, RatFn
from ..ratcalc import (
    Decision,
    LogDerivativeForm,
    ResidueProfile,
    hermite_reduce,
    is_log_derivative_form,
    residue_profile,
)

AUTONOMOUS_VAR = "y"


class AutoType(str, Enum):
    EXACT = "exact"
    EXPONENTIAL = "exponential"
    GENERAL = "general"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class AutonomousVerdict:
    """Verdict plus the data needed to re-check it.

    ``witness`` is the exact-type ``t`` (with ``derive(t) * h == 1``);
    ``log_form`` carries the exponential-type evidence; ``failures`` lists
    why each non-general form was rejected.
    """

    tag: AutoType
    h: RatFn
    w: RatFn
    profile: ResidueProfile
    witness: RatFn | None = None
    log_form: LogDerivativeForm | None = None
    failures: tuple[str, ...] = field(default_factory=tuple)


def _as_ratfn(h: Any) -> RatFn:
    if isinstance(h, RatFn):
        return h if not h.is_constant() else RatFn.const(h.constant_value(), AUTONOMOUS_VAR)
    if isinstance(h, Poly):
        return RatFn(h)
    return RatFn.const(Fraction(h), AUTONOMOUS_VAR)


def classify_autonomous(h: Any) -> AutonomousVerdict:
    h = _as_ratfn(h)
    if not h:
        raise ValueError("h = 0: the equation y' = 0 does not involve y'")
    w = 1 / h
    profile = residue_profile(w)
    if not profile.has_residues:
        t = hermite_reduce(w).rational_part
        return AutonomousVerdict(AutoType.EXACT, h, w, profile, witness=t)

    failures = ["exact: 1/h has nonzero residues"]
    log_form = is_log_derivative_form(w)
    if log_form.decision is Decision.YES:
        return AutonomousVerdict(AutoType.EXPONENTIAL, h, w, profile, log_form=log_form)
    if log_form.decision is Decision.UNKNOWN:
        return AutonomousVerdict(
            AutoType.UNKNOWN, h, w, profile, log_form=log_form, failures=tuple(failures)
        )
    failures.append(f"exponential: {log_form.reason}")
    return AutonomousVerdict(AutoType.GENERAL, h, w, profile, log_form=log_form, failures=tuple(failures))
