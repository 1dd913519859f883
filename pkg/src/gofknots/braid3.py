"""Words in the 3-braid group B3 = <s1, s2> and their monodromy matrices.

A braid acts on the once-punctured torus fiber of its double branched cover;
on first homology s1 acts as R = [[1,1],[0,1]] and s2 as L^-1 =
[[1,0],[-1,1]]. Syllables multiply left to right in word order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .mat2 import IDENTITY, L_INV, R, mul, power

GENERATOR_MATRICES = {1: R, 2: L_INV}

_SYLLABLE = re.compile(r"(s1|s2|σ1|σ2)(?:\^(-?[0-9]+))?")


@dataclass(frozen=True)
class BraidWord:
    """Tuple of (generator, exponent) syllables, generator in {1, 2}.

    Construction does not reduce; use :func:`free_reduce` for that.
    """

    syllables: tuple = ()

    def __post_init__(self):
        syl = tuple((int(g), int(e)) for g, e in self.syllables)
        for g, e in syl:
            if g not in (1, 2):
                raise ValueError(f"generator must be 1 or 2, got {g}")
            if e == 0:
                raise ValueError("braid syllables cannot have exponent 0")
        object.__setattr__(self, "syllables", syl)

    def __str__(self):
        return format_braid(self)

    def __len__(self):
        return len(self.syllables)

    def __add__(self, other):
        return concat(self, other)


def word(*syllables):
    """``word((1, 4), (2, -1))`` -> s1^4 s2^-1."""
    return BraidWord(tuple(syllables))


def parse(text):
    """Parse ``s1^4 s2^-1``-style text; ``σ1``/``σ2`` are accepted too.

    Syllables are separated by spaces. No reduction is applied.
    """
    syllables = []
    pos = 0
    n = len(text)

    def byte_offset(i):
        return len(text[:i].encode("utf-8"))

    while pos < n and text[pos] == " ":
        pos += 1
    while pos < n:
        if syllables:
            if text[pos] != " ":
                raise ParseError("expected a space between syllables", byte_offset(pos))
            while pos < n and text[pos] == " ":
                pos += 1
            if pos == n:
                break
        m = _SYLLABLE.match(text, pos)
        if not m:
            raise ParseError(f"expected s1 or s2 in {text!r}", byte_offset(pos))
        gen = 1 if m.group(1)[-1] == "1" else 2
        exp = 1 if m.group(2) is None else int(m.group(2))
        if exp == 0:
            raise ParseError("exponent 0 is not allowed", byte_offset(m.start(2)))
        end = m.end()
        if end < n and text[end] == "^":
            raise ParseError("exponent must be a nonzero integer literal", byte_offset(end + 1))
        if end < n and text[end] != " ":
            raise ParseError(f"unexpected character {text[end]!r}", byte_offset(end))
        syllables.append((gen, exp))
        pos = end
    return BraidWord(tuple(syllables))


def format_braid(w):
    return " ".join(f"s{g}" if e == 1 else f"s{g}^{e}" for g, e in w.syllables)


def concat(u, v):
    return BraidWord(u.syllables + v.syllables)


def invert(u):
    return BraidWord(tuple((g, -e) for g, e in reversed(u.syllables)))


def free_reduce(u):
    out = []
    for g, e in u.syllables:
        if out and out[-1][0] == g:
            e += out.pop()[1]
        if e:
            out.append((g, e))
    return BraidWord(tuple(out))


def exponent_sum(u):
    return sum(e for _, e in u.syllables)


def monodromy(w):
    """Image of w in SL(2,Z): s1 -> R, s2 -> L^-1, multiplied in word order."""
    M = IDENTITY
    for g, e in w.syllables:
        M = mul(M, power(GENERATOR_MATRICES[g], e))
    return M
