"""
Braid words over sigma_1, ..., sigma_{n-1}.

A braid word is a word in the free group on the braid generators: it is
freely reduced at construction but braid relations are never applied
implicitly.  Deciding whether two words are the same braid is the job of
:mod:`braidaut.dehornoy` or of a faithful representation.

Letters are signed integers (``2`` is sigma_2, ``-2`` its inverse).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable

from .freegroup import RankError, free_reduce


class Sigma1Class(enum.Enum):
    NONNEGATIVE = "nonnegative"
    NEGATIVE = "negative"
    FREE = "free"
    MIXED = "mixed"


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise RankError(f"braid groups need at least 2 strands, got {self.strands}")
        letters = tuple(self.letters)
        for a in letters:
            if a == 0 or abs(a) > self.strands - 1:
                raise RankError(f"generator {a} out of range for B_{self.strands}")
        object.__setattr__(self, "letters", free_reduce(letters))

    @classmethod
    def _trusted(cls, strands: int, letters: tuple[int, ...]) -> BraidWord:
        w = object.__new__(cls)
        object.__setattr__(w, "strands", strands)
        object.__setattr__(w, "letters", letters)
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise RankError(f"strand mismatch: {self.strands} vs {other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def __invert__(self) -> BraidWord:
        return BraidWord._trusted(self.strands, tuple(-a for a in reversed(self.letters)))

    def exponent_sum(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters)

    def __str__(self) -> str:
        return format_braid_word(self)


def braid(strands: int, letters: Iterable[int] = ()) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def relators(n: int) -> list[BraidWord]:
    """Defining relators of B_n: far commutations, then the braid relations."""
    if n < 2:
        raise RankError(f"braid groups need at least 2 strands, got {n}")
    out = []
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append(BraidWord(n, (i, j, -i, -j)))
    for i in range(1, n - 1):
        out.append(BraidWord(n, (i, i + 1, i, -(i + 1), -i, -(i + 1))))
    return out


def classify_sigma1(w: BraidWord) -> Sigma1Class:
    pos = 1 in w.letters
    neg = -1 in w.letters
    if pos and neg:
        return Sigma1Class.MIXED
    if pos:
        return Sigma1Class.NONNEGATIVE
    if neg:
        return Sigma1Class.NEGATIVE
    return Sigma1Class.FREE


def shift_indices(w: BraidWord, by: int) -> BraidWord:
    """Rename sigma_i to sigma_{i+by}, growing or shrinking the strand count."""
    if by == 0:
        return w
    strands = w.strands + by
    if strands < 2:
        raise RankError(f"shift by {by} leaves fewer than 2 strands")
    shifted = []
    for a in w.letters:
        idx = abs(a) + by
        if idx < 1:
            raise RankError(f"shift by {by} moves sigma_{abs(a)} out of range")
        shifted.append(idx if a > 0 else -idx)
    return BraidWord._trusted(strands, tuple(shifted))


_BAND = re.compile(r"^([sS])(\d+)$")


def parse_braid_word(text: str, strands: int) -> BraidWord:
    """Parse ``1 -2 3`` (commas allowed) or band-style ``s1 S2``; ``e`` is empty."""
    letters = []
    for pos, tok in enumerate(text.replace(",", " ").split()):
        if tok == "e":
            continue
        m = _BAND.match(tok)
        try:
            if m is not None:
                a = int(m.group(2)) * (1 if m.group(1) == "s" else -1)
            else:
                a = int(tok)
        except ValueError:
            raise ValueError(f"bad braid token {tok!r} at position {pos}") from None
        if a == 0 or abs(a) > strands - 1:
            raise RankError(f"token {tok!r} at position {pos}: out of range for B_{strands}")
        letters.append(a)
    return BraidWord(strands, tuple(letters))


def format_braid_word(w: BraidWord) -> str:
    if not w.letters:
        return "e"
    return " ".join(str(a) for a in w.letters)
