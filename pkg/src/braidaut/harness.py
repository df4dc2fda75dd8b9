"""
Verification suites: exhaustive and seeded checks over braid words.

Each suite returns a :class:`SuiteResult`; a failing suite carries the first
counterexample in the same text format the CLI reads back.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .braids import BraidWord, format_braid_word, relators
from .dehornoy import DEFAULT_BUDGET, Order, Verdict, compare, handle_reduce, solve_word_problem
from .distinguish import distinguish
from .endo import equal, is_identity
from .freegroup import FreeWord, count_occurrences
from .lattice import RelatorLattice, lattice_contains
from .magnus import (
    expected_determinant,
    generator_matrix,
    is_identity_matrix,
    magnus_matrix,
    magnus_product,
)
from .laurent import LaurentPoly, determinant
from .reps import ARTIN, WADA2, WADA3, RepKind, has_lemma_shape, represent, represent_letters, wada1

SCHEMA_VERSION = 1

ALL_KINDS: tuple[RepKind, ...] = (ARTIN,) + tuple(wada1(k) for k in (-3, -2, -1, 1, 2, 3)) + (WADA2, WADA3)
ORACLE_KINDS: tuple[RepKind, ...] = (ARTIN, wada1(2), WADA2, WADA3)
MAGNUS_KINDS: tuple[RepKind, ...] = (ARTIN,) + tuple(wada1(k) for k in (-3, -2, -1, 1, 2, 3)) + (WADA2,)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    counterexample: Optional[str] = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def fail(self, message: str) -> SuiteResult:
        if self.counterexample is None:
            self.counterexample = message
        return self

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "counterexample": self.counterexample,
            "details": self.details,
        }

    def render(self) -> str:
        head = f"{self.name}: {'PASS' if self.passed else 'FAIL'}, {self.cases} cases"
        lines = [head]
        lines.extend(f"  {k}: {v}" for k, v in self.details.items())
        if self.counterexample:
            lines.append(f"  counterexample: {self.counterexample}")
        return "\n".join(lines)


def _alphabet(n: int) -> list[int]:
    return [g for i in range(1, n) for g in (i, -i)]


def reduced_words(n: int, max_length: int, alphabet: Optional[Sequence[int]] = None) -> Iterator[tuple[int, ...]]:
    """Every freely reduced word of length <= max_length, shortest first."""
    alphabet = list(alphabet) if alphabet is not None else _alphabet(n)
    layer: list[tuple[int, ...]] = [()]
    for _ in range(max_length + 1):
        yield from layer
        layer = [w + (a,) for w in layer for a in alphabet if not w or w[-1] != -a]


def random_word(rng: random.Random, n: int, max_length: int) -> BraidWord:
    length = rng.randint(0, max_length)
    return BraidWord(n, [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)])


def _nonneg_alphabet(n: int) -> list[int]:
    return [1] + [g for i in range(2, n) for g in (i, -i)]


# ---------------------------------------------------------------- relations


def verify_relations(strands: int, kinds: Sequence[RepKind] = ALL_KINDS) -> SuiteResult:
    """Every relator of B_m, 2 <= m <= strands, acts trivially."""
    res = SuiteResult("relations")
    for n in range(2, strands + 1):
        for r in relators(n):
            for kind in kinds:
                res.cases += 1
                if not is_identity(represent(kind, r)):
                    return res.fail(f"{kind} --strands {n} \"{format_braid_word(r)}\"")
        for i in range(1, n):
            res.cases += 1
            w = BraidWord(n, (i,))
            if not equal(represent(ARTIN, w), represent(wada1(1), w)):
                return res.fail(f"artin != wada1:1 on sigma_{i}, --strands {n}")
    res.details["strands"] = f"2..{strands}"
    res.details["kinds"] = [str(k) for k in kinds]
    return res


# -------------------------------------------------------------------- lemma


def verify_lemma(strands: int, max_length: int, kinds: Sequence[RepKind] = ALL_KINDS) -> SuiteResult:
    """Image of x_1 under sigma_1-nonnegative words starting with sigma_1.

    The search tree is every such reduced word, so the shape check at each
    node covers every prefix of every word.
    """
    res = SuiteResult("lemma")
    alphabet = _nonneg_alphabet(strands)
    for kind in kinds:
        if max_length < 1:
            break
        # Only the image of x_1 is tracked.
        stack = [((1,), represent_letters(kind, strands, (1,), [(1,)])[0])]
        while stack:
            word, x1 = stack.pop()
            res.cases += 1
            img = FreeWord._trusted(strands, x1)
            if count_occurrences(img, 1) < 2:
                return res.fail(f"{kind} --strands {strands} \"{' '.join(map(str, word))}\": fewer than 2 x1 letters")
            if not has_lemma_shape(kind, img):
                return res.fail(f"{kind} --strands {strands} \"{' '.join(map(str, word))}\": shape broken")
            if len(word) < max_length:
                for a in alphabet:
                    if a != -word[-1]:
                        stack.append((word + (a,), represent_letters(kind, strands, (a,), [x1])[0]))
    res.details.update(strands=strands, max_length=max_length, kinds=[str(k) for k in kinds])
    return res


# ----------------------------------------------------------- positivity


def verify_positivity(
    strands: int,
    max_length: int,
    kinds: Sequence[RepKind] = ALL_KINDS,
    budget: int = DEFAULT_BUDGET,
) -> SuiteResult:
    """sigma_1-nonnegative words with a sigma_1 are never trivial.

    Checked twice: handle reduction must answer POSITIVE, and no faithful
    action may fix every generator.
    """
    res = SuiteResult("positivity")
    alphabet = _nonneg_alphabet(strands)
    ident = [(g,) for g in range(1, strands + 1)]
    # Depth-first, carrying the generator images of every kind.
    stack = [((), tuple(ident for _ in kinds))]
    while stack:
        word, states = stack.pop()
        if 1 in word:
            res.cases += 1
            text = " ".join(map(str, word))
            verdict = solve_word_problem(BraidWord._trusted(strands, word), budget)
            if verdict is not Verdict.POSITIVE:
                return res.fail(f"--strands {strands} \"{text}\": handle reduction gave {verdict.value}")
            for kind, images in zip(kinds, states):
                if all(img == (g,) for g, img in enumerate(images, start=1)):
                    return res.fail(f"{kind} --strands {strands} \"{text}\": acts trivially")
        if len(word) < max_length:
            for a in alphabet:
                if not word or a != -word[-1]:
                    nxt = tuple(represent_letters(kind, strands, (a,), images) for kind, images in zip(kinds, states))
                    stack.append((word + (a,), nxt))
    res.details.update(strands=strands, max_length=max_length, kinds=[str(k) for k in kinds])
    return res


# ---------------------------------------------------------------- oracle


def _oracle_case(w: BraidWord, kinds: Sequence[RepKind], budget: int) -> tuple[Optional[str], bool]:
    # Returns (failure message or None, whether w is trivial).
    form = handle_reduce(w, budget)
    trivial = form.definite_sign is None
    if not equal(represent(ARTIN, w), represent(ARTIN, form.word)):
        return f"--strands {w.strands} \"{format_braid_word(w)}\": reduced form is not equivalent", trivial
    for kind in kinds:
        if is_identity(represent(kind, w)) != trivial:
            return f"{kind} --strands {w.strands} \"{format_braid_word(w)}\": kernel test disagrees", trivial
    return None, trivial


def verify_oracle(
    bounds: Sequence[tuple[int, int]] = ((3, 6), (4, 5)),
    random_words: int = 10_000,
    random_max_length: int = 30,
    seed: int = 0,
    kinds: Sequence[RepKind] = ORACLE_KINDS,
    budget: int = DEFAULT_BUDGET,
) -> SuiteResult:
    """Handle-reduction triviality against the kernel of each action."""
    res = SuiteResult("oracle")
    trivial = 0
    for n, max_length in bounds:
        for letters in reduced_words(n, max_length):
            w = BraidWord._trusted(n, letters)
            res.cases += 1
            bad, is_trivial = _oracle_case(w, kinds, budget)
            if bad:
                return res.fail(bad)
            trivial += is_trivial
    rng = random.Random(seed)
    strand_choices = sorted({n for n, _ in bounds})
    for _ in range(random_words):
        w = random_word(rng, rng.choice(strand_choices), random_max_length)
        res.cases += 1
        bad, _ = _oracle_case(w, kinds, budget)
        if bad:
            return res.fail(bad)
    res.details.update(
        exhaustive=[f"B_{n} length <= {m}" for n, m in bounds],
        random_words=random_words,
        random_max_length=random_max_length,
        seed=seed,
        trivial_in_exhaustive=trivial,
        kinds=[str(k) for k in kinds],
    )
    return res


# ---------------------------------------------------------------- magnus


def _block_ok(kind: RepKind, n: int) -> bool:
    if kind.tag == "wada2":
        block = [[LaurentPoly.const(2), LaurentPoly.const(-1)], [LaurentPoly.const(1), LaurentPoly()]]
        det = LaurentPoly.const(1)
    else:
        k = kind.exponent
        block = [[1 - LaurentPoly.monomial(k), LaurentPoly.monomial(k)], [LaurentPoly.const(1), LaurentPoly()]]
        det = LaurentPoly.monomial(k, -1)
    for i in range(1, n):
        m = generator_matrix(kind, i, 1, n)
        for a in range(n):
            for b in range(n):
                if i - 1 <= a <= i and i - 1 <= b <= i:
                    want = block[a - i + 1][b - i + 1]
                else:
                    want = LaurentPoly.const(1 if a == b else 0)
                if m[a][b] != want:
                    return False
        if determinant(m) != det:
            return False
    return True


def verify_magnus(
    strands: int = 5,
    random_words: int = 1000,
    max_length: int = 10,
    seed: int = 0,
    kinds: Sequence[RepKind] = MAGNUS_KINDS,
) -> SuiteResult:
    """Generator blocks, relator matrices and the determinant law."""
    res = SuiteResult("magnus")
    for n in range(2, strands + 1):
        for kind in kinds:
            res.cases += 1
            if not _block_ok(kind, n):
                return res.fail(f"{kind} --strands {n}: generator block differs")
    for n in range(2, max(strands, 6) + 1):
        for r in relators(n):
            for kind in kinds:
                res.cases += 1
                if not is_identity_matrix(magnus_matrix(kind, r)):
                    return res.fail(f"{kind} --strands {n} \"{format_braid_word(r)}\": relator matrix not identity")
    rng = random.Random(seed)
    for _ in range(random_words):
        n = rng.randint(2, strands)
        w = random_word(rng, n, max_length)
        for kind in kinds:
            res.cases += 1
            m = magnus_matrix(kind, w)
            if m != magnus_product(kind, w):
                return res.fail(f"{kind} --strands {n} \"{format_braid_word(w)}\": not multiplicative")
            if determinant(m) != expected_determinant(kind, w):
                return res.fail(f"{kind} --strands {n} \"{format_braid_word(w)}\": determinant law fails")
    res.details.update(strands=strands, random_words=random_words, max_length=max_length, seed=seed)
    return res


# ------------------------------------------------------------ distinguish


DISTINGUISH_KINDS: tuple[RepKind, ...] = tuple(wada1(k) for k in (-3, -2, -1, 1, 2, 3)) + (WADA2, WADA3)


def brute_force_contains(generators: Sequence[Sequence[int]], v: Sequence[int], bound: int = 5) -> bool:
    dim = len(v)
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=len(generators)):
        if all(sum(c * g[j] for c, g in zip(coeffs, generators)) == v[j] for j in range(dim)):
            return True
    return False


def random_lattice_instance(rng: random.Random, bound: int = 5):
    """A random full-rank 3x3 instance whose members all have coefficients
    within ``bound``, so brute force over [-bound, bound] is a complete
    membership test for the query vector."""
    from fractions import Fraction

    while True:
        g = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        det = (g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
               - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
               + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]))
        if det == 0:
            continue
        # Columns of g are the generators; the coefficient vector of v is
        # g^-1 v, bounded entrywise by (max row sum of |g^-1|) * |v|_inf.
        cof = [[0] * 3 for _ in range(3)]
        for r in range(3):
            for c in range(3):
                rows = [x for x in range(3) if x != r]
                cols = [y for y in range(3) if y != c]
                minor = g[rows[0]][cols[0]] * g[rows[1]][cols[1]] - g[rows[0]][cols[1]] * g[rows[1]][cols[0]]
                cof[r][c] = (-1) ** (r + c) * minor
        inv_row_sums = [sum(abs(Fraction(cof[c][r], det)) for c in range(3)) for r in range(3)]
        radius = int(bound / max(inv_row_sums))
        if radius < 1:
            continue
        generators = [tuple(g[r][c] for r in range(3)) for c in range(3)]
        if rng.random() < 0.5:
            v = tuple(rng.randint(-radius, radius) for _ in range(3))
        else:
            coeffs = [rng.randint(-bound, bound) for _ in range(3)]
            v = tuple(sum(cf * gen[j] for cf, gen in zip(coeffs, generators)) for j in range(3))
        return generators, v


def verify_distinguish(strands: int = 3, lattice_instances: int = 100, seed: int = 0) -> SuiteResult:
    """Certificates for every pair, plus HNF membership against brute force."""
    res = SuiteResult("distinguish")
    counts = {"separated": 0, "inconclusive": 0}
    for a, b in itertools.combinations(DISTINGUISH_KINDS, 2):
        res.cases += 1
        rep = distinguish(a, b, strands)
        expect_inconclusive = a.tag == b.tag == "wada1" and a.k == -b.k
        want = "inconclusive" if expect_inconclusive else "separated"
        if rep.status != want or not rep.verified:
            return res.fail(f"distinguish --a {a} --b {b} --strands {strands}: {rep.status}")
        counts[rep.status] += 1
    rng = random.Random(seed)
    members = 0
    for _ in range(lattice_instances):
        gens, v = random_lattice_instance(rng)
        res.cases += 1
        fast = lattice_contains(RelatorLattice.spanned_by(gens, 3), v)
        if fast != brute_force_contains(gens, v):
            return res.fail(f"lattice {gens} vector {v}: HNF says {fast}")
        members += fast
    res.details.update(strands=strands, lattice_instances=lattice_instances, lattice_members=members, **counts)
    return res


# ----------------------------------------------------------------- order


def verify_order(triples: int = 1000, max_length: int = 12, seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteResult:
    """Totality, antisymmetry, transitivity and left invariance on samples."""
    res = SuiteResult("order")
    flip = {Order.LESS: Order.GREATER, Order.GREATER: Order.LESS, Order.EQUAL: Order.EQUAL}
    rng = random.Random(seed)
    for _ in range(triples):
        n = rng.choice((3, 4))
        u, v, w = (random_word(rng, n, max_length) for _ in range(3))
        # Some triples get v equal to u as a braid so EQUAL actually occurs.
        if rng.random() < 0.1:
            v = BraidWord(n, u.letters + (1, 2, 1, -2, -1, -2))
        res.cases += 1
        uv, vu = compare(u, v, budget), compare(v, u, budget)
        if uv is not flip[vu]:
            return res.fail(f"antisymmetry: \"{u}\" \"{v}\" --strands {n}")
        uw, vw = compare(u, w, budget), compare(v, w, budget)
        if uv is Order.LESS and vw is Order.LESS and uw is not Order.LESS:
            return res.fail(f"transitivity: \"{u}\" \"{v}\" \"{w}\" --strands {n}")
        if uv is Order.EQUAL and uw is not vw:
            return res.fail(f"equality: \"{u}\" \"{v}\" \"{w}\" --strands {n}")
        if compare(w * u, w * v, budget) is not uv:
            return res.fail(f"left invariance: \"{w}\" \"{u}\" \"{v}\" --strands {n}")
    res.details.update(triples=triples, max_length=max_length, seed=seed)
    return res
