import itertools

import pytest
from hypothesis import given, strategies as st

from braidaut.braids import BraidWord, Sigma1Class, classify_sigma1, relators
from braidaut.dehornoy import (
    BudgetExhausted,
    Order,
    Verdict,
    compare,
    handle_reduce,
    solve_word_problem,
)
from braidaut.endo import equal, is_identity
from braidaut.freegroup import RankError
from braidaut.reps import ARTIN, WADA2, WADA3, represent, wada1

from conftest import braid_words

ORACLE_KINDS = [ARTIN, wada1(2), WADA2, WADA3]


def same_braid(u, v):
    return equal(represent(ARTIN, u), represent(ARTIN, v))


def test_handle_reduce_examples():
    w = BraidWord(3, (-1, 2, 1))
    form = handle_reduce(w)
    assert form.word == BraidWord(3, (2, 1, -2))
    assert (form.main_index, form.definite_sign) == (1, 1)
    assert same_braid(w, form.word)

    form = handle_reduce(BraidWord(3, (1, 2, 1, -2, -1, -2)))
    assert form.word.letters == () and form.main_index is None and form.definite_sign is None

    w = BraidWord(4, (2, -3))
    form = handle_reduce(w)
    assert form.word == w and (form.main_index, form.definite_sign) == (2, 1)


def test_solve_examples():
    assert solve_word_problem(BraidWord(3, (1, 2, 1, -2, -1, -2))) is Verdict.TRIVIAL
    assert solve_word_problem(BraidWord(2, (1,))) is Verdict.POSITIVE
    assert solve_word_problem(BraidWord(3, (-2,))) is Verdict.NEGATIVE
    assert solve_word_problem(BraidWord(5, ())) is Verdict.TRIVIAL


def test_compare_examples():
    w = BraidWord(3, (1, -2, 1))
    assert compare(w, w) is Order.EQUAL
    assert compare(BraidWord(3, ()), BraidWord(3, (1,))) is Order.LESS
    assert compare(BraidWord(3, (2,)), BraidWord(3, (1,))) is Order.LESS
    # sigma_2^-1 sigma_1 is already sigma_1-positive, and equivalent to itself
    assert handle_reduce(BraidWord(3, (-2, 1))).definite_sign == 1
    with pytest.raises(RankError):
        compare(BraidWord(3, ()), BraidWord(4, ()))


def test_budget():
    w = BraidWord(4, (1, 2, -1, 3, -2, 1, -3, -1, 2, 3))
    with pytest.raises(BudgetExhausted):
        handle_reduce(w, budget=1)
    assert same_braid(w, handle_reduce(w).word)


@pytest.mark.parametrize("n", range(2, 7))
def test_relators_are_trivial(n):
    for r in relators(n):
        assert solve_word_problem(r) is Verdict.TRIVIAL
        assert solve_word_problem(~r) is Verdict.TRIVIAL


def _definite(form):
    if not form.word.letters:
        return form.main_index is None
    m = min(abs(a) for a in form.word.letters)
    signs = {1 if a > 0 else -1 for a in form.word.letters if abs(a) == m}
    return form.main_index == m and signs == {form.definite_sign}


@given(braid_words(4, 16))
def test_reduction_certified_and_definite(w):
    form = handle_reduce(w)
    assert same_braid(w, form.word)
    assert _definite(form)


@given(braid_words(5, 14))
def test_reduction_certified_b5(w):
    assert same_braid(w, handle_reduce(w).word)


@given(braid_words(4, 12))
def test_solver_agrees_with_kernel(w):
    trivial = solve_word_problem(w) is Verdict.TRIVIAL
    for kind in ORACLE_KINDS:
        assert is_identity(represent(kind, w)) == trivial


def test_exhaustive_b3_length_4():
    alphabet = [1, -1, 2, -2]
    for length in range(5):
        for letters in itertools.product(alphabet, repeat=length):
            w = BraidWord(3, letters)
            assert (solve_word_problem(w) is Verdict.TRIVIAL) == is_identity(represent(ARTIN, w))


@given(braid_words(4, 12))
def test_positivity(w):
    if classify_sigma1(w) is Sigma1Class.NONNEGATIVE:
        assert solve_word_problem(w) is Verdict.POSITIVE


@given(braid_words(4, 10))
def test_inverse_flips_verdict(w):
    flip = {Verdict.POSITIVE: Verdict.NEGATIVE, Verdict.NEGATIVE: Verdict.POSITIVE, Verdict.TRIVIAL: Verdict.TRIVIAL}
    assert solve_word_problem(~w) is flip[solve_word_problem(w)]


@given(braid_words(3, 8), braid_words(3, 8), braid_words(3, 8))
def test_order_axioms(u, v, w):
    flip = {Order.LESS: Order.GREATER, Order.GREATER: Order.LESS, Order.EQUAL: Order.EQUAL}
    uv = compare(u, v)
    assert compare(v, u) is flip[uv]
    assert compare(w * u, w * v) is uv
    if uv is Order.LESS and compare(v, w) is Order.LESS:
        assert compare(u, w) is Order.LESS


@given(braid_words(4, 8))
def test_conjugate_of_positive_by_relator_stays_positive(w):
    r = relators(4)[1]
    assert solve_word_problem(r * w * ~r) is solve_word_problem(w)
