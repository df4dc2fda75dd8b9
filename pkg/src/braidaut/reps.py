"""
Braid group actions on F_n: Artin's representation and the three Wada
families.

For the generator sigma_i (only x_i and x_{i+1} move):

    artin      x_i -> x_i x_{i+1} x_i^-1           x_{i+1} -> x_i
    wada1:k    x_i -> x_i^k x_{i+1} x_i^-k         x_{i+1} -> x_i
    wada2      x_i -> x_i x_{i+1}^-1 x_i           x_{i+1} -> x_i
    wada3      x_i -> x_i^2 x_{i+1}                x_{i+1} -> x_{i+1}^-1 x_i^-1 x_{i+1}

and for sigma_i^-1:

    artin      x_i -> x_{i+1}                      x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    wada1:k    x_i -> x_{i+1}                      x_{i+1} -> x_{i+1}^-k x_i x_{i+1}^k
    wada2      x_i -> x_{i+1}                      x_{i+1} -> x_{i+1} x_i^-1 x_{i+1}
    wada3      x_i -> x_i x_{i+1}^-1 x_i^-1        x_{i+1} -> x_i x_{i+1}^2

The inverse tables are checked by composition the first time a
(kind, n) table is built.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional

from .braids import BraidWord, Sigma1Class, classify_sigma1
from .endo import FreeEndo, apply_letters, compose, is_identity
from .freegroup import FreeWord, RankError, count_occurrences, syllable_decompose


class ContractError(ValueError):
    """An operation was called outside its precondition."""


@dataclass(frozen=True)
class RepKind:
    tag: str
    k: Optional[int] = None

    def __post_init__(self) -> None:
        if self.tag not in ("artin", "wada1", "wada2", "wada3"):
            raise ValueError(f"unknown representation {self.tag!r}")
        if self.tag == "wada1":
            if self.k is None or self.k == 0:
                raise ValueError("wada1 needs a nonzero integer parameter k")
        elif self.k is not None:
            raise ValueError(f"{self.tag} takes no parameter")

    @property
    def exponent(self) -> Optional[int]:
        """The parameter k of the type (1) family; Artin counts as k = 1."""
        if self.tag == "artin":
            return 1
        return self.k

    def __str__(self) -> str:
        return f"wada1:{self.k}" if self.tag == "wada1" else self.tag


ARTIN = RepKind("artin")
WADA2 = RepKind("wada2")
WADA3 = RepKind("wada3")


def wada1(k: int) -> RepKind:
    return RepKind("wada1", k)


def parse_rep(text: str) -> RepKind:
    """``artin``, ``wada1:k``, ``wada2`` or ``wada3``."""
    text = text.strip().lower()
    if text.startswith("wada1"):
        _, sep, k = text.partition(":")
        if not sep:
            raise ValueError("wada1 selector needs a parameter, e.g. wada1:2")
        try:
            return wada1(int(k))
        except ValueError as exc:
            raise ValueError(f"bad wada1 selector {text!r}: {exc}") from None
    return RepKind(text)


# Each entry: (image of x_i, image of x_{i+1}) as tuples over the symbols
# a = +1 / b = +2 (negated for inverses), later shifted to x_i, x_{i+1}.
def _local_images(kind: RepKind, sign: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    a, b = 1, 2
    if kind.tag in ("artin", "wada1"):
        k = kind.exponent
        p = (a,) * k if k > 0 else (-a,) * -k
        q = (b,) * k if k > 0 else (-b,) * -k
        inv = lambda t: tuple(-c for c in reversed(t))
        if sign > 0:
            return p + (b,) + inv(p), (a,)
        return (b,), inv(q) + (a,) + q
    if kind.tag == "wada2":
        if sign > 0:
            return (a, -b, a), (a,)
        return (b,), (b, -a, b)
    if sign > 0:
        return (a, a, b), (-b, -a, b)
    return (a, -b, -a), (a, b, b)


def _build_generator(kind: RepKind, i: int, sign: int, n: int) -> FreeEndo:
    img_i, img_j = _local_images(kind, sign)
    shift = lambda t: tuple(c + i - 1 if c > 0 else c - i + 1 for c in t)
    images = [(g,) for g in range(1, n + 1)]
    images[i - 1] = shift(img_i)
    images[i] = shift(img_j)
    return FreeEndo.from_letters(n, images)


_tables: dict[tuple[RepKind, int], dict[int, FreeEndo]] = {}
_tables_lock = threading.Lock()


def _table(kind: RepKind, n: int) -> dict[int, FreeEndo]:
    key = (kind, n)
    table = _tables.get(key)
    if table is not None:
        return table
    with _tables_lock:
        table = _tables.get(key)
        if table is None:
            table = {}
            for i in range(1, n):
                pos = _build_generator(kind, i, 1, n)
                neg = _build_generator(kind, i, -1, n)
                if not (is_identity(compose(pos, neg)) and is_identity(compose(neg, pos))):
                    raise RuntimeError(f"inverse table for {kind} sigma_{i} is wrong")
                table[i], table[-i] = pos, neg
            _tables[key] = table
    return table


def generator_image(kind: RepKind, i: int, sign: int, n: int) -> FreeEndo:
    if not 1 <= i <= n - 1:
        raise RankError(f"sigma_{i} out of range for B_{n}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return _table(kind, n)[i * sign]


def represent_letters(kind: RepKind, n: int, letters, start: Optional[list[tuple[int, ...]]] = None):
    """Generator images (as raw tuples) of the braid word ``letters``.

    ``start`` continues from the images of a prefix, which lets enumeration
    share work along a search tree.
    """
    table = _table(kind, n)
    images = list(start) if start is not None else [(g,) for g in range(1, n + 1)]
    for a in letters:
        f = table[a]
        images = [apply_letters(f, w) for w in images]
    return images


def represent(kind: RepKind, w: BraidWord) -> FreeEndo:
    n = w.strands
    images = represent_letters(kind, n, w.letters)
    return FreeEndo(n, tuple(FreeWord._trusted(n, img) for img in images))


def check_lemma_form(kind: RepKind, w: BraidWord) -> bool:
    """Does the image of x_1 keep at least two letters x_1^{+-1}?"""
    if not w.letters or w.letters[0] != 1 or classify_sigma1(w) is not Sigma1Class.NONNEGATIVE:
        raise ContractError("expected a sigma_1-nonnegative word starting with sigma_1")
    x1 = represent(kind, w).images[0]
    return count_occurrences(x1, 1) >= 2


def has_lemma_shape(kind: RepKind, image_of_x1: FreeWord) -> bool:
    """Shape of the image of x_1 under a word starting with sigma_1.

    artin / wada1:k   x_1^k u x_1^-k, u nonempty, not starting or ending in x_1
    wada2             x_1 u x_1, same condition on u
    wada3             x_1^2 u, u not starting in x_1
    """
    syl = syllable_decompose(image_of_x1)
    if kind.tag == "wada3":
        return bool(syl) and syl[0] == (1, 2)
    if kind.tag == "wada2":
        return len(syl) >= 3 and syl[0] == (1, 1) and syl[-1] == (1, 1)
    k = kind.exponent
    return len(syl) >= 3 and syl[0] == (1, k) and syl[-1] == (1, -k)
