"""Lens spaces L(alpha, beta) up to (unoriented) homeomorphism.

L(a, b) and L(a, b') are homeomorphic iff b' = +-b^(+-1) mod a. The canonical
representative has alpha >= 0 and the least beta in that orbit; S^2 x S^1 is
L(0, 1) and S^3 is L(1, 0).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import GofError, ParseError


@dataclass(frozen=True, order=True)
class LensSpace:
    alpha: int
    beta: int

    def __str__(self):
        return f"L({self.alpha},{self.beta})"

    def to_dict(self):
        return {"alpha": self.alpha, "beta": self.beta}

    @classmethod
    def from_dict(cls, data):
        return normalize(data["alpha"], data["beta"])

    @property
    def is_canonical(self):
        try:
            return normalize(self.alpha, self.beta) == self
        except GofError:
            return False


@dataclass(frozen=True)
class TwoBridgeLabel:
    """The two-bridge link b(alpha, beta), whose double branched cover is L(alpha, beta)."""

    alpha: int
    beta: int

    def __str__(self):
        return f"b({self.alpha},{self.beta})"


def beta_orbit(alpha, beta):
    """{+-beta^(+-1) mod alpha} as a sorted list (alpha >= 2, gcd 1)."""
    inv = pow(beta, -1, alpha)
    return sorted({beta % alpha, -beta % alpha, inv, -inv % alpha})


def normalize(alpha, beta):
    if alpha < 0:
        alpha, beta = -alpha, -beta
    if alpha == 0:
        if beta in (1, -1):
            return LensSpace(0, 1)
        if beta % 2 == 0:
            raise GofError(f"L(0,{beta}) is not a lens space (only L(0,1) = S^2 x S^1)")
        raise GofError(f"gcd(0, {beta}) = {abs(beta)} != 1")
    if math.gcd(alpha, beta) != 1:
        raise GofError(f"gcd({alpha}, {beta}) = {math.gcd(alpha, beta)} != 1")
    if alpha == 1:
        return LensSpace(1, 0)
    return LensSpace(alpha, beta_orbit(alpha, beta)[0])


def homeomorphic(L1, L2):
    return normalize(L1.alpha, L1.beta) == normalize(L2.alpha, L2.beta)


_LENS_TEXT = re.compile(r"\s*L\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


def parse_lens(text):
    m = _LENS_TEXT.match(text)
    if not m:
        raise ParseError(f"expected L(a,b), got {text!r}")
    return normalize(int(m.group(1)), int(m.group(2)))


def cf_eval(terms):
    """[a1, ..., an] = 1/(a1 + 1/(a2 + ... + 1/an)) as a reduced Fraction.

    With this convention [p, 2, q] = (2q+1)/(2pq+p+q).
    """
    if not terms:
        raise GofError("continued fraction needs at least one term")
    value = None
    for a in reversed(terms):
        tail = Fraction(a) if value is None else a + value
        if tail == 0:
            raise GofError(f"continued fraction {list(terms)} divides by zero")
        value = 1 / tail
    return value


def double_branched_cover(label):
    return normalize(label.alpha, label.beta)
