from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanoqh import chow
from fanoqh.algebra.poly import c1, c2, d2
from fanoqh.chow import (
    BLOCKS,
    RANK,
    ChowClass,
    ChowError,
    cup,
    degree_of,
    dual_basis,
    involution,
    monomial_class,
    named_class,
    pairing,
    parse_class,
)

B = [ChowClass.basis(i) for i in range(RANK)]
coords = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=RANK, max_size=RANK)
classes = coords.map(lambda v: ChowClass(tuple(v)))


def cls(**kw):
    return ChowClass.from_dict({k.replace("_", "^"): v for k, v in kw.items()})


def test_basis_labels_and_codims():
    assert chow.LABELS[0] == "1" and chow.LABELS[11] == "line" and chow.LABELS[12] == "pt"
    assert [len(BLOCKS[k]) for k in range(7)] == [1, 1, 3, 3, 3, 1, 1]


def test_monomial_class_examples():
    assert monomial_class(3) == ChowClass.from_dict({"c1d2": 4, "c3": -3})
    assert monomial_class(1, 0, 1) == ChowClass.from_dict({"c2^2": 1, "c2d2": -3, "d2^2": 3})
    assert monomial_class(0) == B[0]
    assert monomial_class(1, 2) == 14 * B[chow.LINE]


def test_monomial_class_above_top_degree_is_zero():
    assert monomial_class(7).is_zero()
    assert monomial_class(0, 2, 1).is_zero()
    with pytest.raises(ChowError):
        monomial_class(-1)


def test_line_class_has_both_expressions():
    # 3 c3 d2 - c1^2 c3 and c2 c3 / 3 name the same generator of the codimension-5 part
    a = 3 * monomial_class(0, 0, 1, 1) - monomial_class(2, 0, 1)
    b = Fraction(1, 3) * monomial_class(0, 1, 1)
    assert a == b == B[chow.LINE]


def test_cup_examples():
    assert cup(B[3], B[3]) == B[8]
    assert cup(named_class("p"), named_class("line")) == B[chow.POINT]
    assert cup(monomial_class(2), named_class("P2")) == B[chow.POINT]


def test_cup_grading_and_vanishing():
    for x in B:
        for y in B:
            z = cup(x, y)
            if z.is_zero():
                continue
            assert z.codim == x.codim + y.codim
    assert cup(B[12], B[1]).is_zero()


def test_cup_commutative_and_associative_on_all_basis_triples():
    for x in B:
        for y in B:
            assert cup(x, y) == cup(y, x)
            xy = cup(x, y)
            for z in B:
                assert cup(xy, z) == cup(x, cup(y, z))


INTERSECTIONS = [
    ((6, 0, 0, 0), 57), ((4, 1, 0, 0), 27), ((4, 0, 0, 1), 18), ((3, 0, 1, 0), 5),
    ((2, 2, 0, 0), 14), ((2, 0, 0, 2), 6), ((2, 1, 0, 1), 9), ((1, 0, 1, 1), 2),
    ((1, 1, 1, 0), 3), ((0, 3, 0, 0), 9), ((0, 2, 0, 1), 5), ((0, 1, 0, 2), 3),
    ((0, 0, 0, 3), 2),
]


@pytest.mark.parametrize("exps,value", INTERSECTIONS)
def test_intersection_numbers(exps, value):
    assert pairing(monomial_class(*exps), B[0]) == value


def test_pairing_examples():
    assert pairing(monomial_class(3), monomial_class(3)) == 57
    assert pairing(B[4], B[10]) == 2
    assert pairing(B[0], B[12]) == 1


def test_pairing_blocks_integral_and_nonsingular():
    from fanoqh.algebra import linalg

    for k in range(7):
        block = chow.pairing_block(k)
        assert linalg.det(block) != 0
        assert all(x.denominator == 1 for row in block for x in row)


@settings(max_examples=20)
@given(classes, classes)
def test_pairing_symmetric(x, y):
    assert pairing(x, y) == pairing(y, x)


def test_dual_basis_examples():
    d = dual_basis(4)
    assert d[0] == cls(c1_2=-1, d2=3)
    assert d[1] == cls(c1_2=3, c2=2, d2=-12)
    assert d[2] == cls(c1_2=-2, c2=-3, d2=11)
    assert dual_basis(0) == [B[12]]
    assert dual_basis(6) == [B[0]]
    with pytest.raises(ChowError):
        dual_basis(7)


def test_dual_basis_is_dual_in_every_degree():
    for k in range(7):
        for i, dk in zip(BLOCKS[k], dual_basis(k)):
            assert [pairing(B[j], dk) for j in BLOCKS[k]] == [int(i == j) for j in BLOCKS[k]]


def test_named_class_examples():
    assert named_class("h2") == named_class("P2") == cls(c2_2=-1, c2d2=3, d2_2=-2)
    assert named_class("O2") == cls(c2d2=-3, d2_2=6)
    assert pairing(named_class("O2"), monomial_class(2)) == 9
    o4 = named_class("O4")
    assert [pairing(o4, B[i]) for i in (10, 9, 8)] == [6, 9, 15]
    assert named_class("m") == B[0] and named_class("n") == B[12]
    assert named_class("q_cell") == B[chow.LINE] and named_class("p") == B[1]
    with pytest.raises(ChowError):
        named_class("e4")


def test_integral_classes():
    for name in chow.NAMED_LABELS:
        assert named_class(name).is_integral()
        assert named_class(name).is_homogeneous()


def test_degree_of_examples():
    assert degree_of(named_class("e2"), 2) == 21
    assert degree_of(named_class("h1"), 4) == 2
    assert degree_of(B[0], 0) == 57
    with pytest.raises(ChowError):
        degree_of(B[0] + B[1], 0)


def test_involution_examples():
    assert involution(named_class("e1")) == named_class("e3")
    assert involution(named_class("f2")) == named_class("f2")
    assert involution(B[1]) == B[1]


def test_involution_is_ring_automorphism_preserving_pairing():
    for x in B:
        assert involution(involution(x)) == x
        for y in B:
            assert involution(cup(x, y)) == cup(involution(x), involution(y))
            assert pairing(involution(x), involution(y)) == pairing(x, y)


def test_to_class_rejects_q():
    from fanoqh.algebra.poly import q

    with pytest.raises(ChowError):
        chow.to_class(q * c1)


def test_to_class_of_relations_is_zero():
    for r in chow.CLASSICAL_RELATIONS:
        assert chow.to_class(r).is_zero()
    assert chow.to_class(c1 * c2 - c2 * c1).is_zero()
    assert chow.to_class(3 * c2 * d2) == 3 * B[9]


def test_parse_class():
    assert parse_class("c1^3") == monomial_class(3)
    assert parse_class("c1 * d2^2") == monomial_class(1, 0, 0, 2)
    assert parse_class("[Y]") == B[0]
    assert parse_class("0,1,0,0,0,0,0,0,0,0,0,0,1/2") == B[1] + Fraction(1, 2) * B[12]
    for bad in ("c4", "1,2", "x^2", ""):
        with pytest.raises(ChowError):
            parse_class(bad)
