"""
Fox free differential calculus and the Magnus matrices of braid actions.

The Magnus matrix of an automorphism f of F_n is its Fox Jacobian
[d f(x_a) / d x_b] pushed through the ring map sending every x_j to t.
For artin and wada1:k this reproduces the block [[1-t^k, t^k], [1, 0]] at
position (i, i), for wada2 the block [[2, -1], [1, 0]].

Type wada3 is rejected: the image of x_{i+1} has exponent sum -1, so the
evaluation x_j -> t does not commute with the action and the matrices
would not be multiplicative.
"""

from __future__ import annotations

from collections import Counter

from .braids import BraidWord
from .freegroup import FreeWord, RankError
from .laurent import LaurentPoly, Matrix, ZERO, determinant, identity_matrix, mat_mul
from .reps import RepKind, generator_image, represent

GroupRingElement = Counter  # FreeWord -> integer coefficient


def fox_derivative(w: FreeWord, i: int) -> GroupRingElement:
    """d w / d x_i as an element of Z[F_n].

    Each x_i in w contributes +(prefix before it), each x_i^-1 contributes
    -(prefix up to and including it).
    """
    if not 1 <= i <= w.rank:
        raise RankError(f"x{i} out of range for rank {w.rank}")
    out: Counter = Counter()
    letters = w.letters
    for pos, a in enumerate(letters):
        if a == i:
            out[FreeWord._trusted(w.rank, letters[:pos])] += 1
        elif a == -i:
            out[FreeWord._trusted(w.rank, letters[: pos + 1])] -= 1
    return Counter({g: c for g, c in out.items() if c})


def evaluate_at_t(x: GroupRingElement) -> LaurentPoly:
    """Push an element of Z[F_n] through x_j -> t for every j."""
    coeffs: dict[int, int] = {}
    for g, c in x.items():
        e = sum(1 if a > 0 else -1 for a in g.letters)
        coeffs[e] = coeffs.get(e, 0) + c
    return LaurentPoly(coeffs)


def fox_eval_t(w: FreeWord, i: int) -> LaurentPoly:
    # Single pass, equal to evaluate_at_t(fox_derivative(w, i)).
    if not 1 <= i <= w.rank:
        raise RankError(f"x{i} out of range for rank {w.rank}")
    coeffs: dict[int, int] = {}
    p = 0
    for a in w.letters:
        if a == i:
            coeffs[p] = coeffs.get(p, 0) + 1
            p += 1
        elif a == -i:
            p -= 1
            coeffs[p] = coeffs.get(p, 0) - 1
        else:
            p += 1 if a > 0 else -1
    return LaurentPoly(coeffs)


def fox_jacobian(images: tuple[FreeWord, ...]) -> Matrix:
    n = len(images)
    return [[fox_eval_t(w, b) for b in range(1, n + 1)] for w in images]


def _check_kind(kind: RepKind) -> None:
    if kind.tag == "wada3":
        raise ValueError("wada3 has no Magnus matrix; use the mapping-group certificates")


def magnus_matrix(kind: RepKind, w: BraidWord) -> Matrix:
    _check_kind(kind)
    return fox_jacobian(represent(kind, w).images)


def generator_matrix(kind: RepKind, i: int, sign: int, n: int) -> Matrix:
    _check_kind(kind)
    return fox_jacobian(generator_image(kind, i, sign, n).images)


def magnus_product(kind: RepKind, w: BraidWord) -> Matrix:
    """Product of generator matrices in word order.

    Equal to ``magnus_matrix`` because compose(f, g) has Jacobian J(g) J(f)
    here, and later letters sit on the left of the composition.
    """
    m = identity_matrix(w.strands)
    for a in w.letters:
        m = mat_mul(m, generator_matrix(kind, abs(a), 1 if a > 0 else -1, w.strands))
    return m


def determinant_invariant(kind: RepKind, w: BraidWord) -> LaurentPoly:
    return determinant(magnus_matrix(kind, w))


def expected_determinant(kind: RepKind, w: BraidWord) -> LaurentPoly:
    """(-1)^e t^(k e) for the type (1) family, 1 for wada2; e = exponent sum."""
    _check_kind(kind)
    if kind.tag == "wada2":
        return LaurentPoly.const(1)
    e = w.exponent_sum()
    return LaurentPoly.monomial(kind.exponent * e, (-1) ** (e % 2))


def is_identity_matrix(m: Matrix) -> bool:
    n = len(m)
    return all(m[a][b] == (1 if a == b else ZERO) for a in range(n) for b in range(n))
