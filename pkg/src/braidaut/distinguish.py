"""
Telling the images of different braid actions apart inside Aut(F_n).

Three kinds of certificate, each re-checked before it is returned:

* determinant: wada1:k against wada1:s with |k| > |s|.  Every Magnus
  determinant over the wada1:k image is +-t^(k m), while wada1:s sends
  sigma_1 to an automorphism of determinant -t^s, and k does not divide s.
* determinant: wada1:k against wada2.  Every Magnus determinant over the
  wada2 image is 1, while wada1:k sends sigma_1 to determinant -t^k.
* lattice: wada1:k or wada2 against wada3.  If phi(sigma_1) were in
  psi(B_n), adding its mapping-group relators to those of psi(B_n) would
  not change the normal closure.  The union contains x_1^2 (explicitly
  (x_1 x_2^-1)(x_2 x_1) = x_1^2), while the abelianized relators of
  psi(B_n) alone do not reach 2 e_1, so neither does its normal closure.

wada1:k against wada1:-k stays inconclusive: the images are conjugate by
x_i -> x_i^-1, and the report carries that verified conjugation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

from .endo import FreeEndo, compose, equal, format_endo, inversion_automorphism
from .freegroup import FreeWord, format_free_word, invert, multiply
from .lattice import RelatorLattice, lattice_contains
from .laurent import LaurentPoly, determinant
from .magnus import generator_matrix
from .reps import RepKind, generator_image, wada1


@dataclass(frozen=True)
class MappingRelators:
    rank: int
    relators: tuple[FreeWord, ...]

    def __or__(self, other: MappingRelators) -> MappingRelators:
        return _relator_set(self.rank, self.relators + other.relators)


def _relator_set(rank: int, words: Iterable[FreeWord]) -> MappingRelators:
    uniq = {w for w in words if w.letters}
    return MappingRelators(rank, tuple(sorted(uniq, key=lambda w: (len(w), w.letters))))


def mapping_relators(f: FreeEndo) -> MappingRelators:
    """Relators x_i f(x_i)^-1 of the mapping group of f."""
    words = []
    for i, img in enumerate(f.images, start=1):
        words.append(multiply(FreeWord.generator(f.rank, i), invert(img)))
    return _relator_set(f.rank, words)


def image_relators(kind: RepKind, n: int) -> MappingRelators:
    """Mapping-group relators of the whole image of B_n.

    The generators suffice: if each sigma_i acts trivially modulo a normal
    subgroup, so does every braid.
    """
    out = MappingRelators(n, ())
    for i in range(1, n):
        out = out | mapping_relators(generator_image(kind, i, 1, n))
    return out


def abelianize_lattice(rs: MappingRelators) -> RelatorLattice:
    return RelatorLattice.spanned_by((w.exponent_sums() for w in rs.relators), rs.rank)


def _normalize(kind: RepKind) -> RepKind:
    return wada1(1) if kind.tag == "artin" else kind


@dataclass
class SeparationReport:
    kind_a: RepKind
    kind_b: RepKind
    strands: int
    status: str  # "separated", "inconclusive" or "identical"
    method: str  # "determinant", "lattice", "conjugate" or "none"
    claim: str
    checks: list[tuple[str, bool]] = field(default_factory=list)
    witness: dict[str, Any] = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return all(ok for _, ok in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "a": str(self.kind_a),
            "b": str(self.kind_b),
            "strands": self.strands,
            "status": self.status,
            "method": self.method,
            "claim": self.claim,
            "verified": self.verified,
            "checks": [{"check": name, "ok": ok} for name, ok in self.checks],
            "witness": self.witness,
        }

    def render(self) -> str:
        lines = [
            f"{self.kind_a} vs {self.kind_b} on {self.strands} strands: {self.status.upper()} ({self.method})",
            f"  {self.claim}",
        ]
        for key, value in self.witness.items():
            lines.append(f"  {key}: {value}")
        for name, ok in self.checks:
            lines.append(f"  [{'ok' if ok else 'FAIL'}] {name}")
        lines.append("  certificate verified" if self.verified else "  CERTIFICATE FAILED")
        return "\n".join(lines)


def _det(kind: RepKind, i: int, sign: int, n: int) -> LaurentPoly:
    return determinant(generator_matrix(kind, i, sign, n))


def _determinant_vs_wada1(big: RepKind, small: RepKind, n: int, report: SeparationReport) -> None:
    k, s = big.k, small.k
    report.claim = f"{small}(sigma_1) is not in the image of {big}"
    minus_t = lambda e: LaurentPoly.monomial(e, -1)
    gen_dets = [(i, sign, _det(big, i, sign, n)) for i in range(1, n) for sign in (1, -1)]
    report.checks.append(
        (f"every {big} generator matrix has determinant -t^(+-{k})",
         all(d == minus_t(sign * k) for _, sign, d in gen_dets))
    )
    d = _det(small, 1, 1, n)
    report.checks.append((f"det {small}(sigma_1) = -t^{s}", d == minus_t(s)))
    report.checks.append((f"{s} is not a multiple of {k}", s % k != 0))
    report.witness.update({"det_b_sigma1": str(d), "exponent": s, "modulus": k})


def _determinant_vs_wada2(phi: RepKind, n: int, report: SeparationReport) -> None:
    report.claim = f"{phi}(sigma_1) is not in the image of wada2"
    psi = RepKind("wada2")
    report.checks.append(
        ("every wada2 generator matrix has determinant 1",
         all(_det(psi, i, sign, n) == 1 for i in range(1, n) for sign in (1, -1)))
    )
    d = _det(phi, 1, 1, n)
    report.checks.append((f"det {phi}(sigma_1) = -t^{phi.k} != 1", d == LaurentPoly.monomial(phi.k, -1) and d != 1))
    report.witness["det_sigma1"] = str(d)


def _lattice_vs_wada3(phi: RepKind, n: int, report: SeparationReport) -> None:
    psi = RepKind("wada3")
    report.claim = f"{phi}(sigma_1) is not in the image of wada3"
    rel_phi = mapping_relators(generator_image(phi, 1, 1, n))
    rel_psi = image_relators(psi, n)
    lat_phi = abelianize_lattice(rel_phi)
    lat_psi = abelianize_lattice(rel_psi)
    lat_sum = abelianize_lattice(rel_phi | rel_psi)
    target = (2,) + (0,) * (n - 1)
    report.checks.append(("2e1 in the combined relator lattice", lattice_contains(lat_sum, target)))
    report.checks.append((f"2e1 not in the {phi}(sigma_1) relator lattice", not lattice_contains(lat_phi, target)))
    report.checks.append(("2e1 not in the wada3 image relator lattice", not lattice_contains(lat_psi, target)))

    # x1 X2 is the inverse of a phi(sigma_1) relator; x2 x1 conjugates the
    # wada3 relator x1 x2 by x1.
    x1 = FreeWord.generator(n, 1)
    r_phi = FreeWord(n, (1, -2))
    r_psi = FreeWord(n, (1, 2))
    conj = multiply(multiply(invert(x1), r_psi), x1)
    report.checks.append(("x1 X2 is the inverse of a relator of phi(sigma_1)", invert(r_phi) in rel_phi.relators))
    report.checks.append(("x1 x2 is a relator of wada3(sigma_1)", r_psi in rel_psi.relators))
    report.checks.append(("(x1 X2)(X1 (x1 x2) x1) = x1^2", multiply(r_phi, conj) == FreeWord(n, (1, 1))))
    report.witness.update({
        "target": list(target),
        "phi_sigma1_relators": [format_free_word(w) for w in rel_phi.relators],
        "wada3_relators": [format_free_word(w) for w in rel_psi.relators],
        "lattice_phi": [list(b) for b in lat_phi.basis],
        "lattice_wada3": [list(b) for b in lat_psi.basis],
        "lattice_combined": [list(b) for b in lat_sum.basis],
        "identity": f"({format_free_word(r_phi)}) ({format_free_word(conj)}) = x1 x1",
    })


def conjugating_check(k: int, n: int) -> bool:
    """Does x_i -> x_i^-1 conjugate every wada1:k generator to wada1:-k?"""
    iota = inversion_automorphism(n)
    for i in range(1, n):
        for sign in (1, -1):
            conj = compose(iota, compose(generator_image(wada1(k), i, sign, n), iota))
            if not equal(conj, generator_image(wada1(-k), i, sign, n)):
                return False
    return True


def distinguish(kind_a: RepKind, kind_b: RepKind, n: int) -> SeparationReport:
    a, b = _normalize(kind_a), _normalize(kind_b)
    report = SeparationReport(kind_a, kind_b, n, "separated", "none", "")
    if n < 2:
        raise ValueError(f"need at least 2 strands, got {n}")
    if a == b:
        report.status, report.claim = "identical", "same representation"
        return report

    tags = {a.tag, b.tag}
    if tags == {"wada1"}:
        if a.k == -b.k:
            report.status, report.method = "inconclusive", "conjugate"
            report.claim = "images are conjugate by x_i -> x_i^-1; equality of images is not decided"
            report.checks.append(
                (f"x_i -> x_i^-1 conjugates wada1:{a.k} generators to wada1:{b.k}", conjugating_check(a.k, n))
            )
            report.witness["conjugator"] = format_endo(inversion_automorphism(n))
            return report
        big, small = (a, b) if abs(a.k) > abs(b.k) else (b, a)
        report.method = "determinant"
        _determinant_vs_wada1(big, small, n, report)
    elif tags == {"wada1", "wada2"}:
        report.method = "determinant"
        _determinant_vs_wada2(a if a.tag == "wada1" else b, n, report)
    else:
        if n < 3:
            raise ValueError("the lattice certificate against wada3 needs at least 3 strands")
        report.method = "lattice"
        _lattice_vs_wada3(a if b.tag == "wada3" else b, n, report)

    if not report.verified:
        failed = [name for name, ok in report.checks if not ok]
        raise RuntimeError(f"certificate for {kind_a} vs {kind_b} failed its own checks: {failed}")
    return report
