"""Genus one fibered knots in lens spaces.

Every GOF-knot in a lens space lifts a braid axis of a closed 3-braid whose
double branched cover is that lens space. Up to homeomorphism there are eight
templates:

    A1  s1^4 s2                         L(4,1)
    A2  s1^4 s2^-1                      L(4,1)
    A3  s1 s2^2 s1 s2^-1                L(4,1)
    B1  s1^a s2                         L(a,1),  a > 0, a != 4
    B2  s1^a s2^-1                      L(a,1),  a > 0, a != 4
    C   s2                              L(0,1)
    D1  s1^p s2^2 s1^q s2^-1            L(2pq+p+q, 2q+1),    p, q > 1
    D2  s1^p s2^2 s1^(-q-1) s2^-1       L(2pq+p+q+1, 2q+1),  p, q > 0

A lens space carries three knots iff it is L(4,1), two iff it is L(a,1)
otherwise, one iff it is L(0,1) or one of the D families, and none otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braid3 import BraidWord, format_braid, free_reduce, monodromy, word
from .errors import GofError
from .lens import LensSpace, beta_orbit, normalize
from .mat2 import Matrix2

LABELS = ("A1", "A2", "A3", "B1", "B2", "C", "D1", "D2")


@dataclass(frozen=True)
class GofKnot:
    label: str
    params: tuple  # sorted (name, value) pairs
    braid: BraidWord
    matrix: Matrix2
    trace: int
    ambient: LensSpace

    @property
    def param_dict(self):
        return dict(self.params)

    def describe(self):
        if not self.params:
            return self.label
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.label}({inner})"

    def to_dict(self):
        return {
            "label": self.label,
            "params": self.param_dict,
            "braid": format_braid(self.braid),
            "matrix": self.matrix.rows(),
            "trace": self.trace,
            "ambient": self.ambient.to_dict(),
        }

    @classmethod
    def from_dict(cls, data):
        knot = make_knot(data["label"], **data["params"])
        expected = knot.to_dict()
        if expected != {**data, "params": dict(data["params"])}:
            raise GofError(f"inconsistent knot record: {data!r}")
        return knot


def template_braid(label, alpha=None, p=None, q=None):
    if label == "A1":
        return word((1, 4), (2, 1))
    if label == "A2":
        return word((1, 4), (2, -1))
    if label == "A3":
        return word((1, 1), (2, 2), (1, 1), (2, -1))
    if label == "B1":
        return word((1, alpha), (2, 1))
    if label == "B2":
        return word((1, alpha), (2, -1))
    if label == "C":
        return word((2, 1))
    if label == "D1":
        return word((1, p), (2, 2), (1, q), (2, -1))
    if label == "D2":
        return word((1, p), (2, 2), (1, -q - 1), (2, -1))
    raise GofError(f"unknown label {label!r}")


def template_ambient(label, alpha=None, p=None, q=None):
    if label in ("A1", "A2", "A3"):
        return normalize(4, 1)
    if label in ("B1", "B2"):
        return normalize(alpha, 1)
    if label == "C":
        return normalize(0, 1)
    if label == "D1":
        return normalize(2 * p * q + p + q, 2 * q + 1)
    if label == "D2":
        return normalize(2 * p * q + p + q + 1, 2 * q + 1)
    raise GofError(f"unknown label {label!r}")


def _check_params(label, alpha, p, q):
    if label in ("A1", "A2", "A3", "C"):
        if (alpha, p, q) != (None, None, None):
            raise GofError(f"{label} takes no parameters")
        return ()
    if label in ("B1", "B2"):
        if alpha is None or p is not None or q is not None:
            raise GofError(f"{label} takes exactly one parameter alpha")
        if alpha <= 0 or alpha == 4:
            raise GofError(f"{label} needs alpha > 0 and alpha != 4, got {alpha}")
        return (("alpha", alpha),)
    if label in ("D1", "D2"):
        if alpha is not None or p is None or q is None:
            raise GofError(f"{label} takes exactly the parameters p, q")
        low = 2 if label == "D1" else 1
        if p < low or q < low:
            raise GofError(f"{label} needs p, q >= {low}, got p={p}, q={q}")
        # (p, q) and (q, p) give the same knot; keep p <= q
        p, q = min(p, q), max(p, q)
        return (("p", p), ("q", q))
    raise GofError(f"unknown label {label!r}")


def make_knot(label, alpha=None, p=None, q=None):
    params = _check_params(label, alpha, p, q)
    kw = dict(params)
    braid = template_braid(label, **kw)
    M = monodromy(braid)
    return GofKnot(label, params, braid, M, M.trace, template_ambient(label, **kw))


def _require_canonical(space):
    if not space.is_canonical:
        raise GofError(f"{space} is not in canonical form (expected {normalize(space.alpha, space.beta)})")


def d_family_solutions(space):
    """(label, p, q) candidates from the odd members 2q+1 of the beta orbit."""
    alpha = space.alpha
    found = set()
    for b in beta_orbit(alpha, space.beta):
        if b % 2 == 0:
            continue
        q = (b - 1) // 2
        num = alpha - q
        if num % b == 0:
            p = num // b
            if p > 1 and q > 1:
                found.add(("D1", min(p, q), max(p, q)))
        num = alpha - q - 1
        if num % b == 0:
            p = num // b
            if p > 0 and q > 0:
                found.add(("D2", min(p, q), max(p, q)))
    return sorted(found)


def classify(space):
    """All GOF-knots of a canonical lens space, in label order."""
    _require_canonical(space)
    alpha, beta = space.alpha, space.beta
    if alpha == 0:
        return [make_knot("C")]
    if (alpha, beta) == (4, 1):
        return [make_knot("A1"), make_knot("A2"), make_knot("A3")]
    if alpha == 1 or beta == 1:
        return [make_knot("B1", alpha=alpha), make_knot("B2", alpha=alpha)]
    solutions = d_family_solutions(space)
    if len(solutions) > 1:
        raise AssertionError(f"{space} has several single-knot solutions {solutions}")
    return [make_knot(label, p=p, q=q) for label, p, q in solutions]


def knot_from_braid(w, ambient):
    """Recognize a braid word as one of the eight templates in the given space."""
    red = free_reduce(w)
    s = red.syllables
    gens = tuple(g for g, _ in s)
    exps = tuple(e for _, e in s)
    knot = None
    if gens == (1, 2) and exps[0] > 0 and exps[1] in (1, -1):
        if exps[0] == 4:
            knot = make_knot("A1" if exps[1] == 1 else "A2")
        else:
            knot = make_knot("B1" if exps[1] == 1 else "B2", alpha=exps[0])
    elif s == ((2, 1),):
        knot = make_knot("C")
    elif gens == (1, 2, 1, 2) and exps[1] == 2 and exps[3] == -1:
        p, e = exps[0], exps[2]
        if (p, e) == (1, 1):
            knot = make_knot("A3")
        elif p > 1 and e > 1:
            knot = make_knot("D1", p=p, q=e)
        elif p > 0 and e < -1:
            knot = make_knot("D2", p=p, q=-e - 1)
    if knot is None:
        raise GofError(f"braid {format_braid(w)!r} matches no GOF-knot template")
    expected = normalize(ambient.alpha, ambient.beta)
    if knot.ambient != expected:
        raise GofError(f"{knot.describe()} lives in {knot.ambient}, not {expected}")
    return knot


# ---------------------------------------------------------------------------
# monodromy table


def table_matrix(label, alpha=None, p=None, q=None):
    """Closed-form monodromy matrix per label."""
    if label == "A1":
        return Matrix2(-3, 4, -1, 1)
    if label == "A2":
        return Matrix2(5, 4, 1, 1)
    if label == "A3":
        return Matrix2(-1, 0, -3, -1)
    if label == "B1":
        return Matrix2(1 - alpha, alpha, -1, 1)
    if label == "B2":
        return Matrix2(1 + alpha, alpha, 1, 1)
    if label == "C":
        return Matrix2(1, 0, -1, 1)
    if label == "D1":
        return Matrix2(-2 * p * q - p + q + 1, -2 * p * q + p + q, -2 * q - 1, -2 * q + 1)
    if label == "D2":
        return Matrix2(2 * p * q + p - q, 2 * p * q + 3 * p - q - 1, 2 * q + 1, 2 * q + 3)
    raise GofError(f"unknown label {label!r}")


def table_trace(label, alpha=None, p=None, q=None):
    """Closed-form trace per label."""
    fixed = {"A1": -2, "A2": 6, "A3": -2, "C": 2}
    if label in fixed:
        return fixed[label]
    if label == "B1":
        return 2 - alpha
    if label == "B2":
        return 2 + alpha
    if label == "D1":
        return 2 - q - p * (1 + 2 * q)
    if label == "D2":
        return 3 + p + q + 2 * p * q
    raise GofError(f"unknown label {label!r}")


@dataclass(frozen=True)
class Table1Row:
    label: str
    braid: str
    matrix: str
    trace: str
    params: tuple = field(default=())

    def to_dict(self):
        return {"label": self.label, "braid": self.braid, "matrix": self.matrix, "trace": self.trace}


_TABLE1 = (
    Table1Row("A1", "s1^4 s2", "[[-3,4],[-1,1]]", "-2"),
    Table1Row("A2", "s1^4 s2^-1", "[[5,4],[1,1]]", "6"),
    Table1Row("A3", "s1 s2^2 s1 s2^-1", "[[-1,0],[-3,-1]]", "-2"),
    Table1Row("B1", "s1^alpha s2", "[[1-alpha,alpha],[-1,1]]", "2-alpha", ("alpha",)),
    Table1Row("B2", "s1^alpha s2^-1", "[[1+alpha,alpha],[1,1]]", "2+alpha", ("alpha",)),
    Table1Row("C", "s2", "[[1,0],[-1,1]]", "2"),
    Table1Row(
        "D1", "s1^p s2^2 s1^q s2^-1",
        "[[-2pq-p+q+1,-2pq+p+q],[-2q-1,-2q+1]]", "2-q-p(1+2q)", ("p", "q"),
    ),
    Table1Row(
        "D2", "s1^p s2^2 s1^(-q-1) s2^-1",
        "[[2pq+p-q,2pq+3p-q-1],[2q+1,2q+3]]", "3+p+q+2pq", ("p", "q"),
    ),
)

# parameter ranges over which the closed forms are checked against monodromy()
TABLE1_CHECK_RANGES = {
    "B1": {"alpha": range(1, 51)},
    "B2": {"alpha": range(1, 51)},
    "D1": {"p": range(2, 21), "q": range(2, 21)},
    "D2": {"p": range(1, 21), "q": range(1, 21)},
}


def table1_samples(label):
    """Every parameter assignment in the check range (a single empty one for fixed rows)."""
    ranges = TABLE1_CHECK_RANGES.get(label)
    if ranges is None:
        return [{}]
    if list(ranges) == ["alpha"]:
        return [{"alpha": a} for a in ranges["alpha"]]
    return [{"p": p, "q": q} for p in ranges["p"] for q in ranges["q"]]


def table1_mismatches():
    """(label, params, problem) triples where monodromy disagrees with the closed forms.

    Works on raw template braids, so it also covers parameter values the
    knot constructors reject (e.g. B at alpha = 4).
    """
    bad = []
    for row in _TABLE1:
        for kw in table1_samples(row.label):
            M = monodromy(template_braid(row.label, **kw))
            if M != table_matrix(row.label, **kw):
                bad.append((row.label, kw, f"matrix {M}"))
            if M.trace != table_trace(row.label, **kw):
                bad.append((row.label, kw, f"trace {M.trace}"))
    return bad


def table1():
    """The eight monodromy table rows, each verified against monodromy().

    Raises AssertionError if any closed form disagrees with the braid.
    """
    bad = table1_mismatches()
    if bad:
        raise AssertionError(f"monodromy table disagrees with braid words: {bad[:5]}")
    return list(_TABLE1)


def family_matrix(family, alpha=None, p=None, q=None):
    """Normal forms of the two families with left-orderable integral surgeries.

    family 1: [[1+alpha, alpha], [1, 1]],   alpha > 0
    family 2: [[2pq+p-q, 2pq+3p-q-1], [2q+1, 2q+3]],   p, q > 0
    """
    if family == 1:
        if alpha is None or alpha <= 0:
            raise GofError(f"family 1 needs alpha > 0, got {alpha}")
        return Matrix2(1 + alpha, alpha, 1, 1)
    if family == 2:
        if p is None or q is None or p <= 0 or q <= 0:
            raise GofError(f"family 2 needs p, q > 0, got p={p}, q={q}")
        return Matrix2(2 * p * q + p - q, 2 * p * q + 3 * p - q - 1, 2 * q + 1, 2 * q + 3)
    raise GofError(f"family must be 1 or 2, got {family}")
