"""
Handle reduction, the braid word problem and the Dehornoy order.

A sigma_i-handle is a subword sigma_i^e v sigma_i^-e where v only uses
generators of index > i.  Replacing it by v with every sigma_{i+1}^d
rewritten as sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e gives an equivalent
word.  A handle is reduced only when v holds no sigma_{i+1}-handle; inner
handles are reduced first.  Repeating on sigma_1-handles ends with a word
that is sigma_1-positive, sigma_1-negative or sigma_1-free, and a
sigma_1-free word is shifted down and processed the same way.

Order convention: u < v iff u^-1 v is sigma-positive, so sigma_1 > e.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .braids import BraidWord, shift_indices
from .freegroup import RankError, free_reduce

DEFAULT_BUDGET = 10**7


class BudgetExhausted(RuntimeError):
    """Handle reduction used more rewrites than its step budget allowed."""


class Verdict(enum.Enum):
    TRIVIAL = "TRIVIAL"
    POSITIVE = "POSITIVE"
    NEGATIVE = "NEGATIVE"


class Order(enum.Enum):
    LESS = "LESS"
    EQUAL = "EQUAL"
    GREATER = "GREATER"


@dataclass(frozen=True)
class SigmaDefiniteForm:
    word: BraidWord
    main_index: Optional[int]
    definite_sign: Optional[int]


def _first_handle(w: list[int], lo: int, hi: int, i: int) -> Optional[tuple[int, int]]:
    # Leftmost-closing sigma_i-handle inside w[lo:hi], whose letters all
    # have index >= i.
    last = None
    for q in range(lo, hi):
        a = w[q]
        if a == i or a == -i:
            if last is not None and w[last] == -a:
                return last, q
            last = q
    return None


class _Reducer:
    def __init__(self, budget: int) -> None:
        self.budget = budget
        self.steps = 0

    def _reduce_handle(self, w: list[int], p: int, q: int) -> list[int]:
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExhausted(f"handle reduction exceeded {self.budget} rewrites")
        e = 1 if w[p] > 0 else -1
        i = w[p] if w[p] > 0 else -w[p]
        j = i + 1
        middle: list[int] = []
        for a in w[p + 1 : q]:
            if a == j or a == -j:
                middle.extend((-e * j, i if a > 0 else -i, e * j))
            else:
                middle.append(a)
        return w[:p] + middle + w[q + 1 :]

    def _step(self, w: list[int], lo: int, hi: int, i: int) -> Optional[list[int]]:
        # Perform one permitted reduction on the first sigma_i-handle in
        # w[lo:hi]; returns None if there is no such handle.
        h = _first_handle(w, lo, hi, i)
        if h is None:
            return None
        p, q = h
        inner = self._step(w, p + 1, q, i + 1)
        if inner is not None:
            return inner
        return self._reduce_handle(w, p, q)

    def sigma1_definite(self, letters: tuple[int, ...]) -> tuple[int, ...]:
        w = list(letters)
        while True:
            nxt = self._step(w, 0, len(w), 1)
            if nxt is None:
                return tuple(w)
            w = list(free_reduce(nxt))


def _reduce(w: BraidWord, reducer: _Reducer) -> tuple[BraidWord, int]:
    # Returns a word equivalent to w together with the number of downward
    # shifts applied before it became sigma_1-definite.
    shifts = 0
    while True:
        w = BraidWord._trusted(w.strands, reducer.sigma1_definite(w.letters))
        if not w.letters or 1 in w.letters or -1 in w.letters or w.strands == 2:
            return w, shifts
        w = shift_indices(w, -1)
        shifts += 1


def handle_reduce(w: BraidWord, budget: int = DEFAULT_BUDGET) -> SigmaDefiniteForm:
    reduced, shifts = _reduce(w, _Reducer(budget))
    out = shift_indices(reduced, shifts)
    if not out.letters:
        return SigmaDefiniteForm(out, None, None)
    m = min(abs(a) for a in out.letters)
    sign = 1 if m in out.letters else -1
    return SigmaDefiniteForm(out, m, sign)


def solve_word_problem(w: BraidWord, budget: int = DEFAULT_BUDGET) -> Verdict:
    form = handle_reduce(w, budget)
    if form.definite_sign is None:
        return Verdict.TRIVIAL
    return Verdict.POSITIVE if form.definite_sign > 0 else Verdict.NEGATIVE


def compare(u: BraidWord, v: BraidWord, budget: int = DEFAULT_BUDGET) -> Order:
    """LESS iff u < v, i.e. u^-1 v is sigma-positive."""
    if u.strands != v.strands:
        raise RankError(f"strand mismatch: {u.strands} vs {v.strands}")
    verdict = solve_word_problem(~u * v, budget)
    return {Verdict.POSITIVE: Order.LESS, Verdict.TRIVIAL: Order.EQUAL, Verdict.NEGATIVE: Order.GREATER}[verdict]
