import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gofknots.braid3 import (
    BraidWord,
    concat,
    exponent_sum,
    format_braid,
    free_reduce,
    invert,
    monodromy,
    parse,
    word,
)
from gofknots.errors import ParseError
from gofknots.mat2 import IDENTITY, Matrix2, inverse, mul

syllable = st.tuples(st.sampled_from([1, 2]), st.integers(-5, 5).filter(bool))
words = st.lists(syllable, max_size=20).map(lambda s: BraidWord(tuple(s)))


def hand_product(*rows):
    # left-to-right product of explicit 2x2 lists
    out = [[1, 0], [0, 1]]
    for m in rows:
        out = [[sum(out[i][k] * m[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    return out


def test_parse_examples():
    assert parse("s1^4 s2^-1") == word((1, 4), (2, -1))
    assert parse("") == BraidWord()
    assert parse("σ1^4 σ2") == word((1, 4), (2, 1))
    assert parse("  s1   s2^2 ") == word((1, 1), (2, 2))


@pytest.mark.parametrize(
    "text, offset",
    [("s1^p", 3), ("s1^0", 3), ("s1s2", 2), ("s3", 0), ("s1 x", 3), ("σ1^x", 4), ("s1^-", 3)],
)
def test_parse_errors_carry_byte_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset


def test_parser_does_not_reduce():
    w = parse("s1^2 s1^-2")
    assert w.syllables == ((1, 2), (1, -2))
    assert free_reduce(w) == BraidWord()


def test_group_operations():
    assert invert(word((1, 4), (2, -1))) == word((2, 1), (1, -4))
    assert free_reduce(concat(word((1, 1)), word((1, 1)))) == word((1, 2))
    assert free_reduce(word((1, 2), (2, 1), (2, -1), (1, 3))) == word((1, 5))


def test_exponent_sum():
    assert exponent_sum(word((1, 4), (2, -1))) == 3
    assert exponent_sum(BraidWord()) == 0
    assert exponent_sum(word((1, 2), (2, 2), (1, 2), (2, -1))) == 5


def test_monodromy_table_rows():
    assert monodromy(parse("s1^4 s2")) == Matrix2(-3, 4, -1, 1)
    assert monodromy(parse("s1 s2^2 s1 s2^-1")) == Matrix2(-1, 0, -3, -1)
    assert monodromy(BraidWord()) == IDENTITY


def test_monodromy_d2_at_p_q_1():
    w = parse("s1 s2^2 s1^-2 s2^-1")
    p = q = 1
    closed = Matrix2(2 * p * q + p - q, 2 * p * q + 3 * p - q - 1, 2 * q + 1, 2 * q + 3)
    # s1 -> [[1,1],[0,1]], s2 -> [[1,0],[-1,1]], s2^2 -> [[1,0],[-2,1]], s1^-2 -> [[1,-2],[0,1]], s2^-1 -> [[1,0],[1,1]]
    by_hand = hand_product([[1, 1], [0, 1]], [[1, 0], [-2, 1]], [[1, -2], [0, 1]], [[1, 0], [1, 1]])
    assert closed == Matrix2(2, 3, 3, 5)
    assert by_hand == [[2, 3], [3, 5]]
    assert monodromy(w) == closed
    assert monodromy(w).trace == 7


def test_trefoil_monodromy():
    assert monodromy(parse("s1 s2")) == Matrix2(0, 1, -1, 1)


@settings(max_examples=1000)
@given(words, words)
def test_homomorphism(u, v):
    assert monodromy(concat(u, v)) == mul(monodromy(u), monodromy(v))


@settings(max_examples=1000)
@given(words)
def test_inverse_reduce_det(u):
    M = monodromy(u)
    assert monodromy(invert(u)) == inverse(M)
    assert monodromy(free_reduce(u)) == M
    assert M.det == 1
    r = free_reduce(u)
    assert all(e != 0 for _, e in r.syllables)
    assert all(a[0] != b[0] for a, b in zip(r.syllables, r.syllables[1:]))


@settings(max_examples=1000)
@given(words, st.lists(st.integers(1, 3), min_size=21, max_size=21), st.integers(0, 2), st.integers(0, 2))
def test_print_parse_round_trip(w, gaps, lead, trail):
    canonical = format_braid(w)
    tokens = canonical.split(" ") if canonical else []
    spaced = " " * lead + "".join(t + " " * g for t, g in zip(tokens, gaps))
    spaced = spaced.rstrip(" ") + " " * trail
    assert parse(spaced) == w
    assert format_braid(parse(spaced)) == " ".join(spaced.split())
