"""Exit criteria, one test per criterion, each reporting a pass/fail line."""

import time

import pytest

from braidaut import harness
from braidaut.reps import ARTIN, WADA2, WADA3, wada1

from conftest import ACCEPTANCE_LINES

ALL_KINDS = (ARTIN,) + tuple(wada1(k) for k in (-3, -2, -1, 1, 2, 3)) + (WADA2, WADA3)


def report(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def check(number, title, results, extra=""):
    ok = all(r.passed for r in results)
    cases = sum(r.cases for r in results)
    failures = "; ".join(r.counterexample for r in results if not r.passed)
    report(number, title, ok, f"{cases} cases{extra}" + (f", counterexample: {failures}" if failures else ""))
    assert ok, failures


def test_criterion_1_well_definedness():
    start = time.perf_counter()
    res = harness.verify_relations(6, ALL_KINDS)
    elapsed = time.perf_counter() - start
    ok = res.passed and elapsed < 1.0
    report(1, "relators act trivially, n = 2..6, all kinds", ok, f"{res.cases} cases, {elapsed:.3f}s")
    assert res.passed, res.counterexample
    assert elapsed < 1.0


def test_criterion_2_lemma():
    check(2, "lemma count and shape, B4 length <= 8, B3 length <= 10",
          [harness.verify_lemma(4, 8, ALL_KINDS), harness.verify_lemma(3, 10, ALL_KINDS)])


def test_criterion_3_positivity():
    check(3, "sigma_1-positive words are POSITIVE and act nontrivially",
          [harness.verify_positivity(4, 8, ALL_KINDS), harness.verify_positivity(3, 10, ALL_KINDS)])


def test_criterion_4_oracle_equivalence():
    res = harness.verify_oracle(((3, 6), (4, 5)), random_words=10_000, random_max_length=30, seed=0)
    check(4, "handle reduction agrees with kernel of artin, wada1:2, wada2, wada3", [res],
          f", {res.details.get('trivial_in_exhaustive')} trivial words in the exhaustive part")


def test_criterion_5_magnus():
    check(5, "Magnus blocks exact, determinant law on 1000 random words",
          [harness.verify_magnus(strands=5, random_words=1000, max_length=10, seed=0)])


@pytest.mark.parametrize("n", [3, 4])
def test_criterion_6_distinguisher(n):
    res = harness.verify_distinguish(strands=n, lattice_instances=100, seed=n)
    check(6, f"pairwise certificates on {n} strands, 100 lattice instances vs brute force", [res],
          f", {res.details.get('separated')} separated, {res.details.get('inconclusive')} inconclusive")
    assert res.details["inconclusive"] == 3


def test_criterion_7_order():
    check(7, "order total, antisymmetric, transitive, left-invariant on 1000 triples",
          [harness.verify_order(triples=1000, max_length=12, seed=0)])
