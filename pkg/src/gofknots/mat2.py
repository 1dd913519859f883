"""Exact 2x2 integer matrices and conjugacy in SL(2,Z) / GL(2,Z).

Hyperbolic classes (|trace| > 2) are decided through a canonical cyclic word
in the positive generators

    R = [[1,1],[0,1]]    L = [[1,0],[1,1]]

parabolic classes (|trace| = 2) through the integer n of the normal form
+-[[1,n],[0,1]], and elliptic classes (|trace| < 2) by a small exhaustive
conjugator search.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import GofError, ParseError

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

# entry bound that contains a conjugator for every pair of conjugate reduced
# elliptic matrices; checked against bound 10 in the test suite
ELLIPTIC_BOUND = 3


def _checked(x):
    if not INT64_MIN <= x <= INT64_MAX:
        raise OverflowError(f"integer overflow: {x} does not fit in 64 bits")
    return x


@dataclass(frozen=True)
class Matrix2:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"matrix entry {name} must be an int, got {v!r}")
            _checked(v)

    @classmethod
    def from_rows(cls, rows):
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self):
        return _checked(self.a + self.d)

    @property
    def det(self):
        return _checked(self.a * self.d - self.b * self.c)

    def __matmul__(self, other):
        return mul(self, other)

    def __neg__(self):
        return Matrix2(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, n):
        return power(self, n)

    def inverse(self):
        return inverse(self)

    def to_text(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    def __str__(self):
        return self.to_text()


IDENTITY = Matrix2(1, 0, 0, 1)
R = Matrix2(1, 1, 0, 1)
L = Matrix2(1, 0, 1, 1)
J = Matrix2(1, 0, 0, -1)
S = Matrix2(0, -1, 1, 0)
R_INV = Matrix2(1, -1, 0, 1)
L_INV = Matrix2(1, 0, -1, 1)

# the two Dehn-twist matrices of the once-punctured torus
PHI_A = R
PHI_B = L


def mul(A, B):
    return Matrix2(
        _checked(A.a * B.a + A.b * B.c),
        _checked(A.a * B.b + A.b * B.d),
        _checked(A.c * B.a + A.d * B.c),
        _checked(A.c * B.b + A.d * B.d),
    )


def trace(A):
    return A.trace


def det(A):
    return A.det


def inverse(A):
    """Inverse of a unimodular matrix (det = +-1)."""
    D = A.det
    if D not in (1, -1):
        raise GofError(f"matrix {A} has det {D}; only det +-1 is invertible over Z")
    return Matrix2(D * A.d, -D * A.b, -D * A.c, D * A.a)


def power(A, n):
    """A**n by repeated squaring. Negative n needs det(A) = +-1."""
    if n < 0:
        A = inverse(A)
        n = -n
    result = IDENTITY
    base = A
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def conjugate_by(P, A):
    """P A P^-1."""
    return mul(mul(P, A), inverse(P))


def parse_matrix(text):
    """Parse the ``[[a,b],[c,d]]`` text form."""
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed matrix {text!r}: {exc.msg}", exc.pos) from None
    ok = (
        isinstance(rows, list)
        and len(rows) == 2
        and all(isinstance(r, list) and len(r) == 2 for r in rows)
        and all(isinstance(x, int) and not isinstance(x, bool) for r in rows for x in r)
    )
    if not ok:
        raise ParseError(f"matrix must look like [[a,b],[c,d]] with integer entries, got {text!r}")
    return Matrix2.from_rows(rows)


# ---------------------------------------------------------------------------
# hyperbolic classes: cyclic R/L words


@dataclass(frozen=True)
class RLWord:
    """Cyclic positive word in R and L, stored as its canonical rotation.

    ``syllables`` is a tuple of (letter, exponent) pairs with alternating
    letters, starting with R.
    """

    syllables: tuple

    def matrix(self):
        M = IDENTITY
        for letter, k in self.syllables:
            M = mul(M, power(R if letter == "R" else L, k))
        return M

    def __str__(self):
        return "".join(letter if k == 1 else f"{letter}^{k}" for letter, k in self.syllables)


@dataclass(frozen=True)
class SignedRLClass:
    sign: int
    word: RLWord

    def matrix(self):
        M = self.word.matrix()
        return -M if self.sign < 0 else M

    def __str__(self):
        return ("-" if self.sign < 0 else "") + str(self.word)


def canonical_rotation(syllables):
    """Least cyclic rotation of the expanded R/L string, with R < L.

    Comparing expanded strings R^a1 L^b1 R^a2 ... is the same as comparing
    the tuples (-a1, b1, -a2, b2, ...), so this never expands the word.
    """
    syllables = _merge_cyclic(list(syllables))
    if syllables[0][0] == "L":
        syllables = syllables[1:] + syllables[:1]
    n = len(syllables)
    rotations = [syllables[i:] + syllables[:i] for i in range(0, n, 2)]

    def key(rot):
        return tuple(-k if letter == "R" else k for letter, k in rot)

    return RLWord(tuple(min(rotations, key=key)))


def _merge_cyclic(syllables):
    merged = []
    for letter, k in syllables:
        if merged and merged[-1][0] == letter:
            merged[-1] = (letter, merged[-1][1] + k)
        else:
            merged.append((letter, k))
    if len(merged) > 1 and merged[0][0] == merged[-1][0]:
        letter, k = merged.pop()
        merged[0] = (letter, merged[0][1] + k)
    letters = {letter for letter, _ in merged}
    if letters != {"R", "L"}:
        raise GofError("a hyperbolic cyclic word must contain both R and L")
    return merged


def _gauss_reduce(M):
    """SL(2,Z)-conjugate of M (det 1, c != 0 throughout) with |d-a| <= |c| <= |b|.

    This is Gauss reduction of the binary form c x^2 + (d-a) xy - b y^2:
    R^k conjugation shifts the middle coefficient, S swaps the outer ones.
    Each swap strictly lowers |c|, so the loop terminates.
    """
    while True:
        a, b, c, d = M.entries()
        # R^k M R^-k keeps c and shifts d - a by -2kc
        k = _round_div(d - a, 2 * c)
        if k:
            M = conjugate_by(power(R, k), M)
            a, b, c, d = M.entries()
        if abs(c) > abs(b):
            M = conjugate_by(S, M)
            continue
        return M


def _reduce_to_positive(M):
    """Conjugate M (det 1, trace > 2) into the nonnegative cone.

    After Gauss reduction the form is indefinite and reduced, which forces
    |c| < trace/2 with b, c of the same sign; one more R^k (or S then L^k)
    conjugation makes every entry nonnegative.
    """
    t = M.trace
    M = _gauss_reduce(M)
    a, b, c, d = M.entries()
    if c < 0:
        M = conjugate_by(S, M)
        a, b, c, d = M.entries()
        # now b > 0 and b < t/2; pick a' = a - k b in [1, b]
        a_new = (a - 1) % b + 1
        M = conjugate_by(power(L, (a - a_new) // b), M)
    else:
        a_new = (a - 1) % c + 1
        M = conjugate_by(power(R, (a_new - a) // c), M)
    if min(M.entries()) < 0 or M.trace != t:
        raise AssertionError(f"reduction failed to reach the positive cone: {M}")
    return M


def _round_div(n, m):
    """Nearest integer to n/m (m != 0), ties toward zero-ish; exact ints only."""
    q, r = divmod(n, m)
    # r has the sign of m; compare 2|r| with |m|
    if 2 * abs(r) > abs(m):
        q += 1
    return q


def _peel(M):
    """Factor a nonnegative det-1 matrix into R/L syllables (left to right)."""
    syllables = []
    while M != IDENTITY:
        a, b, c, d = M.entries()
        if c <= a and d <= b:
            # M = R^k M' with M' = (a-kc, b-kd; c, d) still nonnegative
            k = min(a // c if c else math.inf, b // d if d else math.inf)
            if k == math.inf:
                raise AssertionError(f"cannot peel {M}")
            syllables.append(("R", k))
            M = Matrix2(a - k * c, b - k * d, c, d)
        elif a <= c and b <= d:
            k = min(c // a if a else math.inf, d // b if b else math.inf)
            if k == math.inf:
                raise AssertionError(f"cannot peel {M}")
            syllables.append(("L", k))
            M = Matrix2(a, b, c - k * a, d - k * b)
        else:
            raise AssertionError(f"no dominating row in {M}")
    return syllables


def rl_class(A):
    """Signed cyclic R/L word of a hyperbolic det-1 matrix.

    Returns ``SignedRLClass(sign, word)`` where ``sign * word.matrix()`` is
    SL(2,Z)-conjugate to A. Two such matrices are SL(2,Z)-conjugate exactly
    when their classes are equal.
    """
    if A.det != 1:
        raise GofError(f"rl_class needs det 1, got det {A.det} for {A}")
    t = A.trace
    if abs(t) <= 2:
        raise GofError(f"rl_class needs |trace| > 2, got trace {t} for {A}")
    sign = 1
    if t < 0:
        A, sign = -A, -1
    positive = _reduce_to_positive(A)
    return SignedRLClass(sign, canonical_rotation(_peel(positive)))


# ---------------------------------------------------------------------------
# parabolic classes


def _ext_gcd(x, y):
    if y == 0:
        return (x, 1, 0) if x >= 0 else (-x, -1, 0)
    g, s, t = _ext_gcd(y, x % y)
    return g, t, s - (x // y) * t


def parabolic_invariant(A):
    """(eps, n) with eps*A SL(2,Z)-conjugate to [[1,n],[0,1]], for trace +-2, A != +-I."""
    if A.det != 1 or abs(A.trace) != 2:
        raise GofError(f"{A} is not parabolic")
    eps = 1 if A.trace == 2 else -1
    N = Matrix2(eps * A.a - 1, eps * A.b, eps * A.c, eps * A.d - 1)
    if N == Matrix2(0, 0, 0, 0):
        raise GofError(f"{A} is +-I, which has no parabolic invariant")
    x, y = (N.a, N.b) if (N.a, N.b) != (0, 0) else (N.c, N.d)
    g = math.gcd(x, y)
    v1, v2 = -y // g, x // g
    # columns (v, u) with det 1
    _, s, t = _ext_gcd(v1, v2)
    # s*v1 + t*v2 = 1  ->  u = (-t, s)
    Q = Matrix2(v1, -t, v2, s)
    conj = mul(mul(inverse(Q), N), Q)
    if (conj.a, conj.c, conj.d) != (0, 0, 0):
        raise AssertionError(f"parabolic normal form failed for {A}: {conj}")
    return eps, conj.b


# ---------------------------------------------------------------------------
# brute-force oracle


@lru_cache(maxsize=None)
def unimodular_box(bound, group="gl2"):
    """All P with entries in [-bound, bound] and det 1 (sl2) or +-1 (gl2).

    Order is lexicographic in (a, b, c, d), each entry running through
    0, 1, -1, 2, -2, ..., so small conjugators (and I) come first.
    """
    dets = (1,) if group == "sl2" else (-1, 1)
    rng = [0] + [s * k for k in range(1, bound + 1) for s in (1, -1)]
    return tuple(
        Matrix2(a, b, c, d)
        for a, b, c, d in itertools.product(rng, repeat=4)
        if a * d - b * c in dets
    )


def brute_force_conjugator(A, B, bound, group="gl2"):
    """First P in the box (lexicographic scan) with P A = B P, or None.

    ``group="gl2"`` allows det P = +-1, ``group="sl2"`` only det P = 1.
    """
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    for P in unimodular_box(bound, group):
        if mul(P, A) == mul(B, P):
            return P
    return None


def brute_force_orbit(A, bound, group="gl2"):
    """{P A P^-1 : P in the box}; B is in it iff brute_force_conjugator finds P."""
    a, b, c, d = A.entries()
    out = set()
    for P in unimodular_box(bound, group):
        p, q, r, s = P.entries()
        D = p * s - q * r
        # (P A) (D * [[s,-q],[-r,p]])
        x, y, z, w = p * a + q * c, p * b + q * d, r * a + s * c, r * b + s * d
        out.add(Matrix2(D * (x * s - y * r), D * (y * p - x * q), D * (z * s - w * r), D * (w * p - z * q)))
    return out


# ---------------------------------------------------------------------------
# conjugacy decisions


def _require_sl2(*mats):
    for M in mats:
        if M.det != 1:
            raise GofError(f"conjugacy is only decided for det 1 matrices; {M} has det {M.det}")


def conjugacy_key(A):
    """A hashable complete invariant of the SL(2,Z) class of A, except in the
    elliptic case where it is only the trace (brute force decides those)."""
    _require_sl2(A)
    t = A.trace
    if abs(t) > 2:
        return ("hyperbolic", rl_class(A))
    if abs(t) == 2:
        if A in (IDENTITY, -IDENTITY):
            return ("central", t)
        return ("parabolic",) + parabolic_invariant(A)
    return ("elliptic", t)


def conjugate_sl2(A, B):
    """True iff P A P^-1 = B for some P in SL(2,Z)."""
    _require_sl2(A, B)
    if A.trace != B.trace:
        return False
    if abs(A.trace) < 2:
        # reduced definite forms have |c| = 1 and tiny entries, where the
        # bounded search is exhaustive
        A, B = _gauss_reduce(A), _gauss_reduce(B)
        return brute_force_conjugator(A, B, ELLIPTIC_BOUND, group="sl2") is not None
    return conjugacy_key(A) == conjugacy_key(B)


def conjugate_gl2(A, B):
    """True iff P A P^-1 = B for some P in GL(2,Z)."""
    _require_sl2(A, B)
    return conjugate_sl2(A, B) or conjugate_sl2(conjugate_by(J, A), B)
