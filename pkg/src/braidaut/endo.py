"""
Endomorphisms of F_n given by the images of the generators.

Composition convention: ``compose(f, g)`` sends x_i to ``f(g(x_i))``, so
``g`` acts first.  A braid word a_1 a_2 ... a_m is represented by
``compose(rho(a_m), ... compose(rho(a_2), rho(a_1)))``: the first letter's
automorphism is applied to a generator first, and later letters act on the
result.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .freegroup import FreeWord, RankError, format_free_word


@dataclass(frozen=True)
class FreeEndo:
    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        if len(images) != self.rank:
            raise RankError(f"need {self.rank} images, got {len(images)}")
        for w in images:
            if w.rank != self.rank:
                raise RankError(f"image of rank {w.rank} in endomorphism of rank {self.rank}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, rank: int) -> FreeEndo:
        return cls(rank, tuple(FreeWord._trusted(rank, (i,)) for i in range(1, rank + 1)))

    @classmethod
    def from_letters(cls, rank: int, images: Sequence[Sequence[int]]) -> FreeEndo:
        return cls(rank, tuple(FreeWord(rank, tuple(w)) for w in images))

    @cached_property
    def _table(self) -> dict[int, tuple[int, ...]]:
        # Letter -> image letters, for both signs.
        table = {}
        for i, w in enumerate(self.images, start=1):
            table[i] = w.letters
            table[-i] = tuple(-c for c in reversed(w.letters))
        return table

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply(self, w)

    def __str__(self) -> str:
        return format_endo(self)


def apply_letters(f: FreeEndo, letters: Sequence[int]) -> tuple[int, ...]:
    """Substitute and reduce on raw letter tuples (the hot loop)."""
    table = f._table
    out: list[int] = []
    push, pop = out.append, out.pop
    for a in letters:
        for b in table[a]:
            if out and out[-1] == -b:
                pop()
            else:
                push(b)
    return tuple(out)


def apply(f: FreeEndo, w: FreeWord) -> FreeWord:
    if f.rank != w.rank:
        raise RankError(f"rank mismatch: endomorphism {f.rank}, word {w.rank}")
    return FreeWord._trusted(f.rank, apply_letters(f, w.letters))


def compose(f: FreeEndo, g: FreeEndo) -> FreeEndo:
    """The endomorphism x -> f(g(x))."""
    if f.rank != g.rank:
        raise RankError(f"rank mismatch: {f.rank} vs {g.rank}")
    return FreeEndo(f.rank, tuple(FreeWord._trusted(f.rank, apply_letters(f, w.letters)) for w in g.images))


def is_identity(f: FreeEndo) -> bool:
    return all(w.letters == (i,) for i, w in enumerate(f.images, start=1))


def equal(f: FreeEndo, g: FreeEndo) -> bool:
    if f.rank != g.rank:
        raise RankError(f"rank mismatch: {f.rank} vs {g.rank}")
    return f.images == g.images


def inversion_automorphism(rank: int) -> FreeEndo:
    """x_i -> x_i^{-1} for every i (an involution)."""
    return FreeEndo(rank, tuple(FreeWord._trusted(rank, (-i,)) for i in range(1, rank + 1)))


def format_endo(f: FreeEndo) -> str:
    return " ; ".join(f"x{i} -> {format_free_word(w)}" for i, w in enumerate(f.images, start=1))
