import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gofknots.baker import classify, family_matrix, make_knot
from gofknots.errors import GofError
from gofknots.lens import LensSpace
from gofknots.mat2 import IDENTITY, J, L, L_INV, R, Matrix2, conjugate_by, mul
from gofknots.verdict import (
    AllIntegral,
    MonodromyClass,
    Rule,
    Status,
    SurgeryVerdict,
    all_integral_lo,
    lo_family_matches,
    lo_family_membership,
    monodromy_class,
    surgery_verdict,
)

gl2_words = st.lists(st.sampled_from([R, L, J, L_INV]), max_size=10)


def product(ms):
    P = IDENTITY
    for M in ms:
        P = mul(P, M)
    return P


def test_monodromy_class_examples():
    assert monodromy_class(Matrix2(5, 4, 1, 1)) is MonodromyClass.HYPERBOLIC
    assert monodromy_class(Matrix2(1, 0, -1, 1)) is MonodromyClass.REDUCIBLE
    assert monodromy_class(Matrix2(0, 1, -1, 1)) is MonodromyClass.PERIODIC
    assert monodromy_class(Matrix2(-7, -4, -5, -3)) is MonodromyClass.HYPERBOLIC
    with pytest.raises(GofError):
        monodromy_class(Matrix2(0, 1, 1, 0))


def test_surgery_verdict_examples():
    fig8 = make_knot("B2", alpha=1)
    assert fig8.trace == 3
    v = surgery_verdict(fig8, -3)
    assert (v.status, v.rule) == (Status.LEFT_ORDERABLE, Rule.FENLEY)
    b5 = make_knot("B1", alpha=5)
    assert surgery_verdict(b5, 7) == SurgeryVerdict(7, Status.NOT_LEFT_ORDERABLE, Rule.ROBERTS_SHARESHIAN)
    assert surgery_verdict(b5, -1) == SurgeryVerdict(-1, Status.UNKNOWN, Rule.NEGATIVE_SLOPE)
    assert surgery_verdict(b5, 0).status is Status.UNKNOWN
    c = make_knot("C")
    assert surgery_verdict(c, 0) == SurgeryVerdict(0, Status.UNKNOWN, Rule.SEIFERT)


def test_verdict_json_form():
    v = surgery_verdict(make_knot("B1", alpha=5), -1)
    assert v.to_dict() == {"slope": -1, "status": "unknown", "rule": "out-of-scope-negative-slope"}
    assert SurgeryVerdict.from_dict(v.to_dict()) == v


def test_verdict_invariants_enforced():
    with pytest.raises(ValueError):
        SurgeryVerdict(1, Status.LEFT_ORDERABLE, Rule.SEIFERT)
    with pytest.raises(ValueError):
        SurgeryVerdict(0, Status.NOT_LEFT_ORDERABLE, Rule.ROBERTS_SHARESHIAN)


def test_all_integral_lo_examples():
    assert all_integral_lo(make_knot("D2", p=1, q=1)) is AllIntegral.ALL_LO
    assert all_integral_lo(make_knot("D1", p=2, q=2)) is AllIntegral.NOT_ALL_LO
    assert all_integral_lo(make_knot("A1")) is AllIntegral.UNKNOWN


def test_lo_family_membership_examples():
    assert lo_family_membership(Matrix2(5, 4, 1, 1)) == (1, {"alpha": 4})
    M = conjugate_by(mul(R, L), Matrix2(2, 3, 3, 5))
    assert M != Matrix2(2, 3, 3, 5)
    assert lo_family_membership(M) == (2, {"p": 1, "q": 1})
    assert lo_family_membership(Matrix2(1, 1, 1, 2)) == (1, {"alpha": 1})
    assert lo_family_membership(Matrix2(-7, -4, -5, -3)) is None
    assert lo_family_membership(Matrix2(1, 0, -1, 1)) is None
    with pytest.raises(GofError):
        lo_family_membership(J)


def test_family_two_both_orders_are_tested():
    # D2(1,2) and D2(2,1) normal forms are distinct matrices; both are reported
    assert family_matrix(2, p=1, q=2) != family_matrix(2, p=2, q=1)
    matches = lo_family_matches(family_matrix(2, p=1, q=2))
    assert (2, {"p": 1, "q": 2}) in matches and (2, {"p": 2, "q": 1}) in matches


def test_membership_matches_labels():
    for alpha in range(0, 80):
        for beta in range(0, max(alpha, 2)):
            space = LensSpace(alpha, beta)
            if not space.is_canonical:
                continue
            for k in classify(space):
                member = lo_family_membership(k.matrix)
                assert (member is not None) == (k.label in ("A2", "B2", "D2")), k


@settings(max_examples=1000)
@given(st.sampled_from([family_matrix(1, alpha=a) for a in range(1, 9)]
                       + [family_matrix(2, p=p, q=q) for p in range(1, 4) for q in range(1, 4)]
                       + [Matrix2(-7, -4, -5, -3), Matrix2(2, 1, 1, 1), Matrix2(-3, 4, -1, 1), Matrix2(3, 2, 1, 1)]),
       gl2_words)
def test_membership_is_conjugation_invariant(M, word):
    P = product(word)
    assert lo_family_membership(conjugate_by(P, M)) == lo_family_membership(M)


@given(st.integers(-100, 100), st.integers(-50, 50))
def test_negative_trace_pattern(t_offset, n):
    t = -3 - abs(t_offset)
    knot = make_knot("B1", alpha=2 - t)
    v = surgery_verdict(knot, n)
    if n >= 1:
        assert v.status is Status.NOT_LEFT_ORDERABLE
    else:
        assert v.status is Status.UNKNOWN
    assert surgery_verdict(knot, n) == v


def test_verdicts_depend_only_on_trace_and_slope():
    rng = random.Random(5)
    knots = [make_knot("B1", alpha=a) for a in (1, 2, 3, 5, 9)] + [make_knot("D2", p=2, q=3), make_knot("C")]
    for _ in range(200):
        k = rng.choice(knots)
        n = rng.randint(-20, 20)
        assert surgery_verdict(k, n) == surgery_verdict(k, n)
