"""Verification suite comparing the computed rings against stored golden constants."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Callable, Dict, List, Optional

from . import cells, chow, quantum, spectra
from .algebra import linalg
from .algebra.groebner import normal_form
from .algebra.poly import MultiPoly, c1, q
from .algebra.unipoly import UniPoly, poly_gcd, reconstruct
from .chow import RANK, ChowClass, parse_class
from .quantum import QClass


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


class CheckFailed(AssertionError):
    pass


def load_golden(path: Optional[str] = None) -> dict:
    if path is None:
        text = resources.files("fanoqh").joinpath("data/golden.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return json.loads(text)


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise CheckFailed(msg)


def _dict_class(d: Dict[str, object]) -> ChowClass:
    return ChowClass.from_dict({k: Fraction(str(v)) for k, v in d.items()})


def _q_expression(terms) -> QClass:
    out = QClass.zero()
    for coef, n, expr in terms:
        out = out + QClass.embed(Fraction(str(coef)) * parse_class(expr)).shift(int(n))
    return out


# ---------------------------------------------------------------- checks


def check_intersection_numbers(g: dict) -> str:
    for entry in g["intersection_numbers"]:
        got = chow.pairing(parse_class(entry["monomial"]), chow.named_class("m"))
        _expect(got == Fraction(str(entry["value"])), f"{entry['monomial']} = {got}, expected {entry['value']}")
    deg = chow.degree_of(chow.named_class("m"), 0)
    _expect(deg == g["degree_of_Y"], f"degree of Y = {deg}, expected {g['degree_of_Y']}")
    return f"{len(g['intersection_numbers'])} numbers and deg Y = {deg}"


def check_graded_ranks(g: dict) -> str:
    hilb = list(chow.chow_ring().hilbert[: chow.DIM + 1])
    _expect(hilb == g["hilbert_function"], f"Hilbert function {hilb}")
    pres = quantum.qh_setup()
    _expect(len(pres.standard) == g["quantum_rank"], f"{len(pres.standard)} standard monomials coprime to q")
    for rq, rc in zip(pres.relations, chow.CLASSICAL_RELATIONS):
        _expect(rq.at_q(0) in (rc, -rc), f"q = 0 image of {rq} is not classical")
    return f"Hilbert {tuple(hilb)}, quantum rank {len(pres.standard)}"


def check_monomial_classes(g: dict) -> str:
    for mono, coords in g["monomial_classes"].items():
        got = parse_class(mono)
        _expect(got == _dict_class(coords), f"{mono} = {got}")
    return f"{len(g['monomial_classes'])} monomial expansions"


def check_dual_basis(g: dict) -> str:
    duals = chow.dual_basis(4)
    for label, d in zip(("c2^2", "c2d2", "d2^2"), duals):
        want = _dict_class(g["dual_basis_A2"][label])
        _expect(d == want, f"dual of {label} is {d}, expected {want}")
    for k in range(chow.DIM + 1):
        for i, dk in zip(chow.BLOCKS[k], chow.dual_basis(k)):
            for j in chow.BLOCKS[k]:
                _expect(chow.pairing(ChowClass.basis(j), dk) == int(i == j), f"dual basis fails in codimension {k}")
    return "A^2 duals of (c2^2, c2d2, d2^2) and all blocks"


def check_quantum_products(g: dict) -> str:
    for a, b, terms in g["quantum_products"]:
        got = quantum.qmul(parse_class(a), parse_class(b))
        want = _q_expression(terms)
        _expect(got == want, f"{a}*{b} = {got}, expected {want}")
    return f"{len(g['quantum_products'])} products"


def check_gw_table(g: dict) -> str:
    labels = g["gw_table"]["classes"]
    h = chow.named_class("p")
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            got = quantum.gw(h, parse_class(a), parse_class(b), 1)
            want = g["gw_table"]["rows"][i][j]
            _expect(got == want, f"I1(c1, {a}, {b}) = {got}, expected {want}")
    return "4 x 4 table"


def check_gw_values(g: dict) -> str:
    for a, b, c, n, v in g["gw_values"]:
        xs = [parse_class(e) for e in (a, b, c)]
        # a triple off the dimension constraint would vanish for free
        _expect(sum(x.codim for x in xs) == chow.DIM + 3 * int(n), f"I{n}({a}, {b}, {c}) violates the dimension constraint")
        got = quantum.gw(*xs, int(n))
        _expect(got == Fraction(str(v)), f"I{n}({a}, {b}, {c}) = {got}, expected {v}")
    return f"{len(g['gw_values'])} invariants"


def check_degree2(g: dict) -> str:
    value = quantum.verify_degree2_invariant()
    _expect(value == g["degree2_invariant"], f"forced invariant {value}, expected {g['degree2_invariant']}")
    residual = quantum.verify_degree2_invariant(Fraction(g["degree2_invariant"]) + 1)
    _expect(residual != 0, "a perturbed invariant leaves no residual")
    _expect(quantum.qh_setup().degree2_invariant == value, "presentation uses a different value")
    return f"NF(R1) = 2 q^2 c1, I2(c1, line, pt) = {value}"


def check_relation_deformation(g: dict) -> str:
    deformed = quantum.deform_classical_relations()
    for d, r in zip(deformed, quantum.QUANTUM_RELATIONS):
        _expect(d == r or d == -r, f"deformed relation {d} differs from {r}")
    return "5 relations"


def check_quantum_chevalley(g: dict) -> str:
    table = dict(quantum.chevalley_table())
    for label, terms in g["chevalley"].items():
        got = {(t, n): c for c, n, t in quantum.to_cell_terms(table[label])}
        want = {(t, int(n)): Fraction(str(c)) for c, n, t in terms}
        _expect(got == want, f"c1*{label} = {quantum.format_cell_terms(quantum.to_cell_terms(table[label]))}")
    return f"{len(g['chevalley'])} formulas"


def check_classical_chevalley(g: dict) -> str:
    ok, failures = cells.verify_chevalley_diagram("classical")
    _expect(ok, "; ".join(failures))
    return f"{len(cells.chevalley_edges())} weighted edges"


def check_cell_pairings(g: dict) -> str:
    ok, failures = cells.verify_cell_pairings()
    _expect(ok, "; ".join(failures))
    for label in cells.hasse_poset().labels:
        _expect(cells.cell_class(label) == chow.named_class(label), f"stored class of {label} differs")
    return "e/h dual, f orthonormal, (m, n) = (p, q_cell) = 1"


def check_cell_degrees(g: dict) -> str:
    for label, want in g["cell_degrees"].items():
        x = cells.cell_class(label)
        got = chow.degree_of(x, x.codim)
        _expect(got == want, f"degree of {label} = {got}, expected {want}")
    return f"{len(g['cell_degrees'])} degrees"


def check_orbit_classes(g: dict) -> str:
    oc = g["orbit_checks"]
    got = chow.pairing(chow.named_class("O2"), chow.monomial_class(2))
    _expect(got == oc["O2_against_c1^2"], f"(O2, c1^2) = {got}")
    for label, want in oc["O4_against"].items():
        got = chow.pairing(chow.named_class("O4"), parse_class(label))
        _expect(got == want, f"(O4, {label}) = {got}, expected {want}")
    return "O2 degree and O4 pairings"


def check_involution(g: dict) -> str:
    inv = chow.involution
    basis = [ChowClass.basis(i) for i in range(RANK)]
    for x in basis:
        for y in basis:
            _expect(inv(x * y) == inv(x) * inv(y), f"not multiplicative on {x.label}, {y.label}")
            _expect(chow.pairing(inv(x), inv(y)) == chow.pairing(x, y), "pairing not preserved")
        _expect(inv(inv(x)) == x, f"not an involution on {x.label}")
    for a, b in (("e1", "e3"), ("f1", "f3"), ("h1", "h3")):
        _expect(inv(chow.named_class(a)) == chow.named_class(b), f"{a} does not go to {b}")
    for a in ("e2", "f2", "h2", "p", "d2", "line", "pt", "m"):
        _expect(inv(chow.named_class(a)) == chow.named_class(a), f"{a} is not fixed")
    _expect(quantum.involution_preserves_ideal(), "quantum ideal not preserved")
    return "automorphism, swaps and fixed classes, quantum ideal"


def check_poset(g: dict) -> str:
    poset = cells.hasse_poset()
    for a, b in poset.covers:
        _expect(poset.dims[a] == poset.dims[b] + 1, f"cover {a} > {b} skips a dimension")
    _expect(poset.maximal() == ["m"] and poset.minimal() == ["n"], "top/bottom are not m/n")
    covers = set(poset.covers)
    _expect(poset.relabel(cells.INVOLUTION_SWAP) == covers, "involution relabeling is not an automorphism")
    _expect(poset.relabel(cells.REVERSAL, reverse=True) == covers, "poset is not self-dual")
    edges = {k for k, w in cells.chevalley_edges().items() if w}
    _expect(edges == covers, "c1 diagram and closure covers differ")
    return f"{len(poset.labels)} cells, {len(covers)} covers"


def check_semisimplicity(g: dict) -> str:
    fixed = [Fraction(v) for v in g["semisimple_samples"]]
    _expect(tuple(fixed) == spectra.FIXED_SAMPLES, f"stored samples {g['semisimple_samples']} differ from the library's")
    samples = fixed + spectra.sample_q_values()[len(spectra.FIXED_SAMPLES):]
    for v in samples:
        _expect(spectra.trace_det_at(v) != 0, f"trace form degenerate at q = {v}")
    _expect(spectra.trace_det_at(0) == 0, "trace form nondegenerate at q = 0")
    return f"nondegenerate at {len(samples)} nonzero q, degenerate at q = 0"


def check_spectrum(g: dict) -> str:
    tol, match = spectra.DEFAULT_TOL, spectra.MATCH_TOL
    rep = spectra.c1_spectrum(spectra.specialize(1), tol)
    sp = g["spectrum_q1"]
    expected = [(re, im, 1) for re, im in sp["simple"]] + [(re, im, 2) for re, im in sp["double"]]
    ok, worst = spectra.match_roots(rep.roots, expected, match)
    _expect(ok, f"roots do not match the reference eigenvalues (worst distance {worst:.3e})")
    divisor = UniPoly([1])
    for coeffs, m in sp["divisor"]:
        _expect(Fraction(coeffs[-1]) == 1, f"divisor factor {coeffs} is not monic")
        divisor = divisor * UniPoly([Fraction(c) for c in coeffs]) ** m
    quot, rem = divmod(rep.char_poly, divisor)
    _expect(rem.is_zero(), "char poly not divisible by the expected factor")
    _expect(quot.degree == 6 and poly_gcd(quot, quot.derivative()).degree == 0, "cofactor is not squarefree of degree 6")
    coeffs = reconstruct(rep.roots)
    err = max(abs(a - float(b)) for a, b in zip(coeffs, rep.char_poly.coeffs))
    _expect(err < 10 * tol * max(1.0, max(abs(float(c)) for c in rep.char_poly.coeffs)), f"reconstruction error {err:.2e}")
    return f"13 eigenvalues within {worst:.1e}, pattern {rep.multiplicity_pattern()}"


def check_residual_length(g: dict) -> str:
    alg = spectra.specialize(1)
    length = spectra.vanishing_length(alg, chow.named_class("p"))
    _expect(length == g["zero_eigenvalue_length_q1"], f"generalized 0-eigenspace has dimension {length}")
    _expect(RANK - length == g["residual_length"], f"residual length {RANK - length}")
    return f"zero length {length}, residual {RANK - length}"


def check_properties(g: dict) -> str:
    rng = random.Random(7)
    basis = [ChowClass.basis(i) for i in range(RANK)]
    qb = [QClass.embed(b) for b in basis]
    for x in qb:
        _expect(quantum.qmul(qb[0], x) == x, "unit law fails")
    for _ in range(20):
        a, b, c = (rng.choice(qb) for _ in range(3))
        _expect(quantum.qmul(quantum.qmul(a, b), c) == quantum.qmul(a, quantum.qmul(b, c)), "associativity fails")
        _expect(quantum.qmul(a, b) == quantum.qmul(b, a), "commutativity fails")
    gb = quantum.qh_setup().gb
    for _ in range(20):
        p = MultiPoly({tuple(rng.randint(0, 2) for _ in range(4)): rng.randint(-5, 5) for _ in range(4)})
        nf = normal_form(p, gb)
        _expect(normal_form(nf, gb) == nf, "normal form not idempotent")
    for n in range(1, 5):
        m = [[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
        _expect(linalg.is_zero_matrix(linalg.eval_poly_at_matrix(linalg.char_poly(m), m)), "Cayley-Hamilton fails")
    return "unit, 20 triples, 20 normal forms, Cayley-Hamilton"


CHECKS: Dict[str, Callable[[dict], str]] = {
    "intersection_numbers": check_intersection_numbers,
    "graded_ranks": check_graded_ranks,
    "monomial_classes": check_monomial_classes,
    "dual_basis": check_dual_basis,
    "quantum_products": check_quantum_products,
    "gw_table": check_gw_table,
    "gw_values": check_gw_values,
    "degree2_invariant": check_degree2,
    "relation_deformation": check_relation_deformation,
    "quantum_chevalley": check_quantum_chevalley,
    "classical_chevalley": check_classical_chevalley,
    "cell_pairings": check_cell_pairings,
    "cell_degrees": check_cell_degrees,
    "orbit_classes": check_orbit_classes,
    "involution": check_involution,
    "poset": check_poset,
    "semisimplicity": check_semisimplicity,
    "spectrum_q1": check_spectrum,
    "residual_length": check_residual_length,
    "properties": check_properties,
}


def run_check(name: str, golden: dict) -> CheckResult:
    try:
        detail = CHECKS[name](golden)
        return CheckResult(name, True, detail)
    except Exception as exc:  # a broken check must be reported, not crash the suite
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")


def run_checks(golden: Optional[dict] = None, names=None) -> List[CheckResult]:
    golden = load_golden() if golden is None else golden
    return [run_check(n, golden) for n in (names or CHECKS)]
