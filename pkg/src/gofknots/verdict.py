"""Left-orderability verdicts for integral surgeries on GOF-knots.

Rules, keyed on the trace t of the monodromy matrix:

* t > 2: the suspension flow of the punctured-torus bundle is an R-covered
  Anosov flow, so every integral surgery has left-orderable pi_1 (Fenley).
* t < -2: for n > 0 the n-surgery has non-left-orderable pi_1
  (Roberts-Shareshian); n <= 0 is not decided here.
* |t| <= 2: the surgeries are Seifert fibered. Deciding those needs the
  Seifert invariants, which this package does not compute, so the answer is
  unknown.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .baker import family_matrix
from .errors import GofError
from .mat2 import conjugate_gl2


class MonodromyClass(str, enum.Enum):
    HYPERBOLIC = "hyperbolic"
    REDUCIBLE = "reducible"
    PERIODIC = "periodic"


class Status(str, enum.Enum):
    LEFT_ORDERABLE = "left-orderable"
    NOT_LEFT_ORDERABLE = "not-left-orderable"
    UNKNOWN = "unknown"


class Rule(str, enum.Enum):
    FENLEY = "fenley-anosov"
    ROBERTS_SHARESHIAN = "roberts-shareshian"
    SEIFERT = "out-of-scope-seifert"
    NEGATIVE_SLOPE = "out-of-scope-negative-slope"


class AllIntegral(str, enum.Enum):
    ALL_LO = "all-lo"
    NOT_ALL_LO = "not-all-lo"
    UNKNOWN = "unknown"


STATUS_TEXT = {
    Status.LEFT_ORDERABLE: "left-orderable",
    Status.NOT_LEFT_ORDERABLE: "not left-orderable",
    Status.UNKNOWN: "unknown",
}

RULE_TEXT = {
    Rule.FENLEY: "Fenley: trace > 2, R-covered Anosov flow",
    Rule.ROBERTS_SHARESHIAN: "Roberts-Shareshian: trace < -2, slope > 0",
    Rule.SEIFERT: "Seifert fibered case, not decided",
    Rule.NEGATIVE_SLOPE: "trace < -2 with slope <= 0, not decided",
}


@dataclass(frozen=True)
class SurgeryVerdict:
    slope: int
    status: Status
    rule: Rule

    def __post_init__(self):
        if self.status is Status.LEFT_ORDERABLE and self.rule is not Rule.FENLEY:
            raise ValueError("left-orderable verdicts must come from the Fenley rule")
        if self.status is Status.NOT_LEFT_ORDERABLE and (
            self.rule is not Rule.ROBERTS_SHARESHIAN or self.slope <= 0
        ):
            raise ValueError("non-left-orderable verdicts need the Roberts-Shareshian rule and slope > 0")

    def to_dict(self):
        return {"slope": self.slope, "status": self.status.value, "rule": self.rule.value}

    @classmethod
    def from_dict(cls, data):
        return cls(data["slope"], Status(data["status"]), Rule(data["rule"]))

    def describe(self):
        return f"{STATUS_TEXT[self.status]} ({RULE_TEXT[self.rule]})"


def monodromy_class(M):
    if M.det != 1:
        raise GofError(f"monodromy matrices have det 1; {M} has det {M.det}")
    t = abs(M.trace)
    if t > 2:
        return MonodromyClass.HYPERBOLIC
    if t == 2:
        return MonodromyClass.REDUCIBLE
    return MonodromyClass.PERIODIC


def verdict_for_trace(t, n):
    if t > 2:
        return SurgeryVerdict(n, Status.LEFT_ORDERABLE, Rule.FENLEY)
    if t < -2:
        if n > 0:
            return SurgeryVerdict(n, Status.NOT_LEFT_ORDERABLE, Rule.ROBERTS_SHARESHIAN)
        return SurgeryVerdict(n, Status.UNKNOWN, Rule.NEGATIVE_SLOPE)
    return SurgeryVerdict(n, Status.UNKNOWN, Rule.SEIFERT)


def surgery_verdict(knot, n):
    """Verdict for the integral n-surgery on ``knot``."""
    return verdict_for_trace(knot.trace, n)


def verdicts(knot, slopes):
    return [surgery_verdict(knot, n) for n in slopes]


def all_integral_lo(knot):
    t = knot.trace
    if t > 2:
        return AllIntegral.ALL_LO
    if t < -2:
        return AllIntegral.NOT_ALL_LO
    return AllIntegral.UNKNOWN


def _family_candidates(t):
    yield 1, {"alpha": t - 2}
    # 3 + p + q + 2pq = t  <=>  p = (t - 3 - q) / (2q + 1)
    q = 1
    while t - 3 - q >= 2 * q + 1:
        num = t - 3 - q
        if num % (2 * q + 1) == 0:
            yield 2, {"p": num // (2 * q + 1), "q": q}
        q += 1


def lo_family_matches(M):
    """Every (family, params) whose normal form is GL(2,Z)-conjugate to M.

    Family 1 is tried first, then family 2 by increasing q; (p, q) and (q, p)
    are tested separately.
    """
    if M.det != 1:
        raise GofError(f"family membership needs det 1; {M} has det {M.det}")
    t = M.trace
    if t <= 2:
        return []
    return [
        (family, params)
        for family, params in _family_candidates(t)
        if conjugate_gl2(M, family_matrix(family, **params))
    ]


def lo_family_membership(M):
    """First matching family as (family, params), or None."""
    matches = lo_family_matches(M)
    return matches[0] if matches else None
