from fractions import Fraction

import pytest

from fanoqh import chow, quantum, spectra
from fanoqh.algebra import linalg
from fanoqh.algebra.unipoly import UniPoly, poly_gcd
from fanoqh.chow import RANK, ChowClass, named_class, parse_class

B = [ChowClass.basis(i) for i in range(RANK)]
T = UniPoly([0, 1])
H = named_class("p")

SIMPLE = [
    (0.0, 0.0), (-1.810645079075508, 0.0), (3.446424449092975, 0.0),
    (-1.723212224546488, 2.984691125138305), (-1.723212224546488, -2.984691125138305),
    (0.9053225395377538, 1.568064635716674), (0.9053225395377538, -1.568064635716674),
]
DOUBLE = [(-1.0, 0.0), (0.5, 0.866025403784439), (0.5, -0.866025403784439)]


@pytest.fixture(scope="module")
def alg1():
    return spectra.specialize(1)


@pytest.fixture(scope="module")
def report1(alg1):
    return spectra.c1_spectrum(alg1)


def test_specialize_at_zero_is_the_cup_product():
    alg = spectra.specialize(0)
    for x in B:
        for y in B:
            assert alg.product(x, y) == chow.cup(x, y)


def test_products_at_q_one(alg1):
    assert alg1.product(H, B[chow.POINT]) == 3 * named_class("h2") + 2 * H
    expected = B[chow.POINT] + named_class("f1") + named_class("f3") + 2 * B[0]
    assert alg1.product(H, B[chow.LINE]) == expected


def test_specialize_agrees_with_qclass_evaluation():
    alg = spectra.specialize(Fraction(-2, 3))
    for i in (1, 4, 7, 11):
        for j in (2, 10, 12):
            assert alg.product(B[i], B[j]) == quantum.qmul(B[i], B[j]).at_q(Fraction(-2, 3))


def test_mult_operator_is_a_representation(alg1):
    assert spectra.mult_operator(alg1, B[0]) == linalg.identity(RANK)
    for i in (1, 3, 6):
        for j in (2, 5, 11):
            lhs = linalg.matmul(spectra.mult_operator(alg1, B[i]), spectra.mult_operator(alg1, B[j]))
            assert lhs == spectra.mult_operator(alg1, alg1.product(B[i], B[j]))


def test_c1_nilpotent_classically():
    m = spectra.mult_operator(spectra.specialize(0), H)
    assert linalg.is_zero_matrix(linalg.matpow(m, 7))
    assert not linalg.is_zero_matrix(linalg.matpow(m, 6))


def test_trace_certificates():
    det0, ss0 = spectra.trace_form_certificate(spectra.specialize(0))
    assert det0 == 0 and not ss0
    det1, ss1 = spectra.trace_form_certificate(spectra.specialize(1))
    assert ss1 and det1 == -1861493074946271
    assert spectra.trace_det_at(Fraction(1, 7)) != 0
    assert spectra.trace_det_at(Fraction(1)) == det1


def test_trace_det_polynomial_is_a_pure_power_of_q():
    p = spectra.trace_det_polynomial()
    assert p.degree == 26 and p.coeffs[:26] == (0,) * 26
    assert p.coeffs[26] == -1861493074946271
    # interpolation nodes were 1..40; check points off the grid
    for x in (Fraction(-3), Fraction(1, 2), Fraction(41)):
        assert p(x) == spectra.trace_det_at(x)


def test_semisimple_at_all_samples():
    samples = spectra.sample_q_values()
    assert len(samples) == 20 and 0 not in samples
    assert samples == spectra.sample_q_values()
    assert quantum.semisimplicity_reduced_check()
    assert not quantum.semisimplicity_reduced_check([0])


def test_char_poly_at_q_one(report1):
    assert report1.char_poly == T ** 13 - 33 * T ** 10 - 312 * T ** 7 - 521 * T ** 4 - 243 * T
    assert report1.char_poly == T * (T ** 3 + 1) ** 2 * (T ** 6 - 35 * T ** 3 - 243)
    parts = dict((m, f) for f, m in report1.squarefree_parts)
    assert parts == {1: T ** 7 - 35 * T ** 4 - 243 * T, 2: T ** 3 + 1}


def test_char_poly_divisible_with_squarefree_cofactor(report1):
    divisor = T * (T + 1) ** 2 * (T ** 2 - T + 1) ** 2
    quot, rem = divmod(report1.char_poly, divisor)
    assert rem.is_zero()
    assert quot.degree == 6 and poly_gcd(quot, quot.derivative()).degree == 0


def test_spectrum_matches_reference_roots(report1):
    assert report1.multiplicity_pattern() == {1: 7, 2: 3}
    expected = [(re, im, 1) for re, im in SIMPLE] + [(re, im, 2) for re, im in DOUBLE]
    ok, worst = spectra.match_roots(report1.roots, expected)
    assert ok and worst < 1e-9


def test_spectrum_matcher_rejects_shifted_points(report1):
    shifted = [(re + 1e-6, im, 1) for re, im in SIMPLE] + [(re, im, 2) for re, im in DOUBLE]
    assert not spectra.match_roots(report1.roots, shifted)[0]
    wrong_mult = [(re, im, 2) for re, im in SIMPLE] + [(re, im, 2) for re, im in DOUBLE]
    assert not spectra.match_roots(report1.roots, wrong_mult)[0]


def test_reference_roots_scale_by_two():
    # the real roots and their rotations pair up as r and -r/2 +- i r sqrt(3)/2
    assert abs(3.446424449092975 - 2 * 1.723212224546488) < 1e-9
    assert abs(1.810645079075508 - 2 * 0.9053225395377538) < 1e-9


def test_trace_equals_sum_of_eigenvalues(alg1, report1):
    tr = sum(spectra.mult_operator(alg1, H)[i][i] for i in range(RANK))
    total = sum(r.value * r.multiplicity for r in report1.roots)
    assert abs(total - float(tr)) < 1e-9


def test_vanishing_lengths(alg1):
    assert spectra.vanishing_length(alg1, H) == 1
    assert spectra.vanishing_length(alg1, B[0]) == 0
    assert spectra.vanishing_length(spectra.specialize(0), H) == 13


def test_report_at_q_zero():
    rep = spectra.c1_spectrum(spectra.specialize(0))
    assert rep.char_poly == T ** 13
    assert [(r.re, r.im, r.multiplicity) for r in rep.roots] == [(0.0, 0.0, 13)]
    assert not rep.semisimple and rep.zero_eigenvalue_length == 13


def test_report_at_q_two_scales_from_q_one(report1):
    # c1 has degree 1 and q degree 3, so eigenvalues scale by 2^(1/3)
    rep = spectra.c1_spectrum(spectra.specialize(2))
    s = 2 ** (1 / 3)
    ok, worst = spectra.match_roots(rep.roots, [(r.re * s, r.im * s, r.multiplicity) for r in report1.roots])
    assert ok, worst


def test_report_json_and_svg(report1):
    data = report1.to_json()
    assert set(data) == {"q", "char_poly", "roots", "trace_det", "semisimple"}
    assert data["q"] == "1" and data["trace_det"] == "-1861493074946271"
    assert data["char_poly"][1] == "-243" and len(data["roots"]) == 10
    svg = spectra.to_svg(report1)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert svg.count("<circle") == 7 and svg.count('fill="red"') == 3
    assert "Real" in svg and "Imaginary" in svg


def test_tolerance_must_be_positive(alg1):
    with pytest.raises(ValueError):
        spectra.c1_spectrum(alg1, tol=0)


def test_non_generator_class_spectrum(alg1):
    # multiplication by c2 commutes with c1 multiplication
    a = spectra.mult_operator(alg1, H)
    b = spectra.mult_operator(alg1, parse_class("c2"))
    assert linalg.matmul(a, b) == linalg.matmul(b, a)
