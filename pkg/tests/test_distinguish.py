import itertools
import random

import pytest
from hypothesis import given, strategies as st

from braidaut.distinguish import (
    MappingRelators,
    abelianize_lattice,
    conjugating_check,
    distinguish,
    image_relators,
    mapping_relators,
)
from braidaut.endo import FreeEndo, compose, equal, inversion_automorphism
from braidaut.freegroup import FreeWord, invert, parse_free_word
from braidaut.harness import brute_force_contains, random_lattice_instance
from braidaut.lattice import RelatorLattice, hermite_basis, lattice_contains
from braidaut.reps import ARTIN, WADA2, WADA3, generator_image, represent, wada1
from braidaut.braids import BraidWord

vectors3 = st.lists(st.tuples(*[st.integers(-4, 4)] * 3), max_size=4)


def rels(rank, *texts):
    return MappingRelators(rank, tuple(parse_free_word(t, rank) for t in texts))


# --------------------------------------------------------------- lattice


def test_abelianize_examples():
    assert abelianize_lattice(rels(2, "x1 X2")).basis == ((1, -1),)
    lat = abelianize_lattice(rels(3, "x1 x2", "x1 x3"))
    assert lat == RelatorLattice.spanned_by([(1, 1, 0), (1, 0, 1)], 3)
    assert abelianize_lattice(MappingRelators(3, ())).basis == ()


def test_lattice_contains_examples():
    assert lattice_contains(RelatorLattice.spanned_by([(1, -1), (1, 1)], 2), (2, 0))
    assert not lattice_contains(RelatorLattice.spanned_by([(1, 1, 0), (1, 0, 1)], 3), (2, 0, 0))
    for lat in (RelatorLattice(3, ()), RelatorLattice.spanned_by([(2, 3, 1)], 3)):
        assert lattice_contains(lat, (0, 0, 0))
    with pytest.raises(ValueError):
        lattice_contains(RelatorLattice(3, ()), (1, 0))


@given(vectors3, st.randoms(use_true_random=False))
def test_hnf_canonical(vs, rnd):
    shuffled = [tuple(-x for x in v) if rnd.random() < 0.5 else v for v in vs]
    rnd.shuffle(shuffled)
    assert hermite_basis(vs, 3) == hermite_basis(shuffled, 3)


@given(vectors3, st.tuples(*[st.integers(-3, 3)] * 3))
def test_hnf_membership_vs_generators(vs, v):
    lat = RelatorLattice.spanned_by(vs, 3)
    for g in vs:
        assert lattice_contains(lat, g)
    # a combination found by brute force must be accepted
    if brute_force_contains(vs, v, bound=3):
        assert lattice_contains(lat, v)


def test_relator_lattice_reordering_and_inversion():
    words = [parse_free_word(t, 3) for t in ("x1 x2", "x2 X3 x2", "x1 x1 X3")]
    a = abelianize_lattice(MappingRelators(3, tuple(words)))
    b = abelianize_lattice(MappingRelators(3, tuple(invert(w) for w in reversed(words))))
    assert a == b


def test_lattice_vs_brute_force_random():
    rng = random.Random(11)
    members = 0
    for _ in range(100):
        gens, v = random_lattice_instance(rng)
        fast = lattice_contains(RelatorLattice.spanned_by(gens, 3), v)
        assert fast == brute_force_contains(gens, v)
        members += fast
    assert 0 < members < 100


def test_rank_deficient_lattice_vs_brute_force():
    gens = [(1, -1, 0), (0, 1, -1)]
    lat = RelatorLattice.spanned_by(gens, 3)
    for v in itertools.product(range(-3, 4), repeat=3):
        # coefficients of a member are (v1, -v3), both within the box
        assert lattice_contains(lat, v) == brute_force_contains(gens, v)


# ------------------------------------------------------------- relators


def test_mapping_relators_examples():
    assert mapping_relators(FreeEndo.identity(3)).relators == ()
    rs = mapping_relators(generator_image(ARTIN, 1, 1, 2))
    assert set(rs.relators) == {parse_free_word("x1 x1 X2 X1", 2), parse_free_word("x2 X1", 2)}
    assert abelianize_lattice(rs).basis == ((1, -1),)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_image_presentations(n):
    # x1 = x2 = ... = xn for types (1)/(2); x1 = x2^-1 = x3 = ... for type (3)
    same = RelatorLattice.spanned_by([tuple(1 if j == i else -1 if j == i + 1 else 0 for j in range(n)) for i in range(n - 1)], n)
    alt = RelatorLattice.spanned_by([tuple(1 if j in (i, i + 1) else 0 for j in range(n)) for i in range(n - 1)], n)
    for kind in (ARTIN, WADA2, wada1(-2), wada1(3)):
        assert abelianize_lattice(image_relators(kind, n)) == same
    assert abelianize_lattice(image_relators(WADA3, n)) == alt


def test_full_braid_image_wada3():
    n = 4
    w = BraidWord(n, (1, 2, 3, -2, 1))
    lat = abelianize_lattice(mapping_relators(represent(WADA3, w)))
    alt = abelianize_lattice(image_relators(WADA3, n))
    # every relator of a braid image lies in the normal closure of the generators'
    for b in lat.basis:
        assert lattice_contains(alt, b)


# ------------------------------------------------------------ distinguish


def test_distinguish_examples():
    rep = distinguish(wada1(1), wada1(3), 3)
    assert rep.status == "separated" and rep.method == "determinant" and rep.verified
    assert rep.witness["det_b_sigma1"] == "-t"

    rep = distinguish(wada1(2), wada1(-2), 3)
    assert rep.status == "inconclusive" and rep.verified

    rep = distinguish(WADA2, WADA3, 3)
    assert rep.status == "separated" and rep.method == "lattice" and rep.verified


def test_distinguish_errors_and_identity():
    with pytest.raises(ValueError):
        distinguish(WADA2, WADA3, 2)
    assert distinguish(ARTIN, wada1(1), 3).status == "identical"
    assert distinguish(wada1(1), wada1(2), 2).status == "separated"


@pytest.mark.parametrize("n", [3, 4, 5])
def test_all_pairs(n):
    kinds = [wada1(k) for k in (-3, -2, -1, 1, 2, 3)] + [WADA2, WADA3]
    for a, b in itertools.combinations(kinds, 2):
        rep = distinguish(a, b, n)
        assert rep.verified
        inconclusive = a.tag == b.tag == "wada1" and a.k == -b.k
        assert rep.status == ("inconclusive" if inconclusive else "separated")
        assert rep.to_dict()["verified"] is True


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_inversion_conjugates_wada1(n, k):
    assert conjugating_check(k, n)
    iota = inversion_automorphism(n)
    assert equal(compose(iota, iota), FreeEndo.identity(n))
    # not conjugated onto wada1:k itself for k != -k
    f = generator_image(wada1(k), 1, 1, n)
    assert not equal(compose(iota, compose(f, iota)), f)
