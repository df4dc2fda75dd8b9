"""
Reduced words in the free group F_n on x_1, ..., x_n.

A letter is a nonzero integer: ``i`` stands for x_i and ``-i`` for its
inverse.  Words are stored freely reduced, so two ``FreeWord`` values are
equal as group elements iff they compare equal.

Text form: ``x1 x2 X1`` (capital letter = inverse), with ``x1^-2`` accepted
on input.  The empty word prints as ``e``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class RankError(ValueError):
    """A generator index outside 1..rank, or two words of different rank."""


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def _check_letters(letters: Sequence[int], rank: int) -> None:
    for a in letters:
        if a == 0 or abs(a) > rank:
            raise RankError(f"letter {a} out of range for rank {rank}")


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise RankError(f"rank must be >= 1, got {self.rank}")
        letters = tuple(self.letters)
        _check_letters(letters, self.rank)
        object.__setattr__(self, "letters", free_reduce(letters))

    @classmethod
    def _trusted(cls, rank: int, letters: tuple[int, ...]) -> FreeWord:
        # Skips validation; callers guarantee a reduced in-range tuple.
        w = object.__new__(cls)
        object.__setattr__(w, "rank", rank)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def identity(cls, rank: int) -> FreeWord:
        return cls(rank, ())

    @classmethod
    def generator(cls, rank: int, i: int, power: int = 1) -> FreeWord:
        if not 1 <= i <= rank:
            raise RankError(f"generator x{i} out of range for rank {rank}")
        a = i if power > 0 else -i
        return cls._trusted(rank, (a,) * abs(power))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return multiply(self, other)

    def __invert__(self) -> FreeWord:
        return invert(self)

    def __pow__(self, e: int) -> FreeWord:
        base = self if e >= 0 else invert(self)
        out = FreeWord.identity(self.rank)
        for _ in range(abs(e)):
            out = multiply(out, base)
        return out

    def exponent_sums(self) -> tuple[int, ...]:
        """Image of the word in the abelianization Z^rank."""
        v = [0] * self.rank
        for a in self.letters:
            v[abs(a) - 1] += 1 if a > 0 else -1
        return tuple(v)

    def __str__(self) -> str:
        return format_free_word(self)


def reduce(letters: Iterable[int], rank: int) -> FreeWord:
    return FreeWord(rank, tuple(letters))


def _check_same_rank(a: FreeWord, b: FreeWord) -> None:
    if a.rank != b.rank:
        raise RankError(f"rank mismatch: {a.rank} vs {b.rank}")


def multiply(a: FreeWord, b: FreeWord) -> FreeWord:
    _check_same_rank(a, b)
    x, y = a.letters, b.letters
    # Only the boundary can cancel since both factors are reduced.
    k = 0
    while k < len(x) and k < len(y) and x[-1 - k] == -y[k]:
        k += 1
    return FreeWord._trusted(a.rank, x[: len(x) - k] + y[k:])


def invert(a: FreeWord) -> FreeWord:
    return FreeWord._trusted(a.rank, tuple(-c for c in reversed(a.letters)))


def count_occurrences(a: FreeWord, i: int) -> int:
    if not 1 <= i <= a.rank:
        raise RankError(f"generator x{i} out of range for rank {a.rank}")
    return sum(1 for c in a.letters if c == i or c == -i)


def syllable_decompose(a: FreeWord) -> list[tuple[int, int]]:
    """Split ``a`` into maximal powers of single generators.

    >>> syllable_decompose(parse_free_word("x1^2 X2 x1", 2))
    [(1, 2), (2, -1), (1, 1)]
    """
    out: list[tuple[int, int]] = []
    for c in a.letters:
        idx, s = abs(c), (1 if c > 0 else -1)
        if out and out[-1][0] == idx:
            out[-1] = (idx, out[-1][1] + s)
        else:
            out.append((idx, s))
    return out


def from_syllables(syllables: Iterable[tuple[int, int]], rank: int) -> FreeWord:
    letters: list[int] = []
    for idx, e in syllables:
        letters.extend([idx if e > 0 else -idx] * abs(e))
    return FreeWord(rank, tuple(letters))


_TOKEN = re.compile(r"^([xX])(\d+)(?:\^(-?\d+))?$")


def parse_free_word(text: str, rank: int) -> FreeWord:
    """Parse ``x1 X2 x3^-2``; ``e``, ``1`` or blank mean the identity."""
    letters: list[int] = []
    for pos, tok in enumerate(text.replace(",", " ").replace("*", " ").split()):
        if tok in ("e", "1"):
            continue
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"bad free-group token {tok!r} at position {pos}")
        idx = int(m.group(2))
        if not 1 <= idx <= rank:
            raise RankError(f"token {tok!r} at position {pos}: x{idx} out of range for rank {rank}")
        power = int(m.group(3)) if m.group(3) is not None else 1
        if m.group(1) == "X":
            power = -power
        letters.extend([idx if power > 0 else -idx] * abs(power))
    return FreeWord(rank, tuple(letters))


def format_free_word(a: FreeWord) -> str:
    if not a.letters:
        return "e"
    return " ".join(f"x{c}" if c > 0 else f"X{-c}" for c in a.letters)
