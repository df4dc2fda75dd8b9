"""
Integer lattices in Z^n held in Hermite normal form.

The basis vectors are the columns of an echelon matrix: each vector has a
positive pivot, zeros before it, pivots strictly increase from one vector
to the next, and the entries sitting above a later pivot are reduced into
[0, pivot).  That basis is unique for the lattice, so two generating sets
span the same lattice iff their HNFs coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def hermite_basis(vectors: Iterable[Sequence[int]], dim: int) -> tuple[tuple[int, ...], ...]:
    pool = []
    for v in vectors:
        if len(v) != dim:
            raise ValueError(f"vector of length {len(v)} in Z^{dim}")
        if any(v):
            pool.append(list(v))
    basis: list[list[int]] = []
    pivots: list[int] = []
    for col in range(dim):
        # Euclid on column `col` among the remaining vectors.
        while True:
            live = [r for r in pool if r[col] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            for r in live[1:]:
                q = r[col] // piv[col]
                for j in range(col, dim):
                    r[j] -= q * piv[j]
            pool = [r for r in pool if any(r)]
        live = [r for r in pool if r[col] != 0]
        if not live:
            continue
        piv = live[0]
        pool.remove(piv)
        if piv[col] < 0:
            piv = [-x for x in piv]
        basis.append(piv)
        pivots.append(col)
    for j, (b, c) in enumerate(zip(basis, pivots)):
        for i in range(j):
            q = basis[i][c] // b[c]
            if q:
                basis[i] = [x - q * y for x, y in zip(basis[i], b)]
    return tuple(tuple(b) for b in basis)


def _pivot(v: Sequence[int]) -> int:
    return next(i for i, x in enumerate(v) if x != 0)


@dataclass(frozen=True)
class RelatorLattice:
    rank: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def spanned_by(cls, vectors: Iterable[Sequence[int]], rank: int) -> RelatorLattice:
        return cls(rank, hermite_basis(vectors, rank))

    def __add__(self, other: RelatorLattice) -> RelatorLattice:
        if self.rank != other.rank:
            raise ValueError(f"dimension mismatch: {self.rank} vs {other.rank}")
        return RelatorLattice.spanned_by(self.basis + other.basis, self.rank)

    def __contains__(self, v: Sequence[int]) -> bool:
        return lattice_contains(self, v)


def lattice_contains(lattice: RelatorLattice, v: Sequence[int]) -> bool:
    if len(v) != lattice.rank:
        raise ValueError(f"vector of length {len(v)} tested against Z^{lattice.rank}")
    r = list(v)
    for b in lattice.basis:
        c = _pivot(b)
        if any(r[:c]):
            return False
        q, rem = divmod(r[c], b[c])
        if rem:
            return False
        if q:
            r = [x - q * y for x, y in zip(r, b)]
    return not any(r)
