import pytest
from hypothesis import given, strategies as st

from braidaut.braids import (
    BraidWord,
    Sigma1Class,
    classify_sigma1,
    format_braid_word,
    parse_braid_word,
    relators,
    shift_indices,
)
from braidaut.freegroup import RankError

from conftest import braid_words


def test_relators_small():
    assert relators(2) == []
    assert relators(3) == [BraidWord(3, (1, 2, 1, -2, -1, -2))]
    r4 = relators(4)
    assert BraidWord(4, (1, 3, -1, -3)) in r4
    assert BraidWord(4, (1, 2, 1, -2, -1, -2)) in r4
    assert BraidWord(4, (2, 3, 2, -3, -2, -3)) in r4
    assert len(r4) == 3
    with pytest.raises(RankError):
        relators(1)


@pytest.mark.parametrize("n", range(2, 8))
def test_relator_count(n):
    far_pairs = (n - 2) * (n - 3) // 2 if n >= 3 else 0
    assert len(relators(n)) == far_pairs + max(n - 2, 0)


@pytest.mark.parametrize(
    "letters, expected",
    [
        ((1, -2, 1), Sigma1Class.NONNEGATIVE),
        ((2, -3), Sigma1Class.FREE),
        ((-1, 2, 1), Sigma1Class.MIXED),
        ((-1, 2, -1), Sigma1Class.NEGATIVE),
    ],
)
def test_classify_examples(letters, expected):
    assert classify_sigma1(BraidWord(4, letters)) is expected


@given(braid_words(4, 12))
def test_classify_under_inversion(w):
    swap = {
        Sigma1Class.NONNEGATIVE: Sigma1Class.NEGATIVE,
        Sigma1Class.NEGATIVE: Sigma1Class.NONNEGATIVE,
        Sigma1Class.FREE: Sigma1Class.FREE,
        Sigma1Class.MIXED: Sigma1Class.MIXED,
    }
    assert classify_sigma1(~w) is swap[classify_sigma1(w)]


def test_shift_examples():
    assert shift_indices(BraidWord(4, (2, 3)), -1) == BraidWord(3, (1, 2))
    w = BraidWord(3, (1, -2))
    assert shift_indices(w, 0) == w
    assert shift_indices(BraidWord(3, (1,)), 1) == BraidWord(4, (2,))
    with pytest.raises(RankError):
        shift_indices(BraidWord(3, (1,)), -1)


@given(braid_words(4, 10), st.integers(0, 3))
def test_shift_round_trip(w, a):
    assert shift_indices(shift_indices(w, a), -a) == w


def test_construction_free_reduces_only():
    assert BraidWord(3, (1, 2, -2, -1)).letters == ()
    # the braid relation is not applied implicitly
    assert BraidWord(3, (1, 2, 1)) != BraidWord(3, (2, 1, 2))
    with pytest.raises(RankError):
        BraidWord(3, (3,))
    with pytest.raises(RankError):
        BraidWord(1, ())


def test_parse_formats():
    assert parse_braid_word("1 -2, 3", 4).letters == (1, -2, 3)
    assert parse_braid_word("s1 S2", 3).letters == (1, -2)
    assert parse_braid_word("", 3).letters == ()
    assert format_braid_word(BraidWord(3, ())) == "e"
    with pytest.raises(ValueError):
        parse_braid_word("1 x", 3)
    with pytest.raises(RankError):
        parse_braid_word("1 3", 3)


@given(braid_words(5, 12))
def test_braid_text_round_trip(w):
    assert parse_braid_word(format_braid_word(w), 5) == w
