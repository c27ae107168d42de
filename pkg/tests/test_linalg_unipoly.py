import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanoqh.algebra import linalg
from fanoqh.algebra.unipoly import (
    RootFindingError,
    UniPoly,
    complex_roots,
    interpolate,
    poly_gcd,
    reconstruct,
    relative_residual,
    squarefree_decomposition,
)

T = UniPoly([0, 1])


def square_matrices(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(
            st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )


def char_poly_by_interpolation(m):
    """Oracle: det(t I - M) sampled at n + 1 integers and interpolated."""
    n = len(m)
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        shifted = [[(x if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)]
        ys.append(linalg.det(shifted))
    return interpolate(xs, ys)


def test_char_poly_trivial_cases():
    assert linalg.char_poly(linalg.identity(2)) == (T - 1) ** 2
    assert linalg.char_poly(linalg.zeros(3)) == T ** 3


@given(square_matrices())
def test_char_poly_matches_determinant_oracle(m):
    cp = linalg.char_poly(m)
    assert cp.degree == len(m) and cp.lc() == 1
    assert cp == char_poly_by_interpolation(m)


@settings(max_examples=30)
@given(square_matrices())
def test_cayley_hamilton(m):
    assert linalg.is_zero_matrix(linalg.eval_poly_at_matrix(linalg.char_poly(m), m))


def test_char_poly_rejects_non_square():
    with pytest.raises(ValueError):
        linalg.char_poly([[Fraction(1), Fraction(2)]])


@given(square_matrices(4))
def test_inverse_or_singular(m):
    if linalg.det(m) == 0:
        with pytest.raises(linalg.SingularMatrixError):
            linalg.inverse(m)
        assert linalg.rank(m) < len(m)
    else:
        assert linalg.matmul(m, linalg.inverse(m)) == linalg.identity(len(m))


def test_rank_nullity():
    m = linalg.as_matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert linalg.rank(m) == 2 and linalg.nullity(m) == 1
    assert linalg.det(m) == 0


def test_unipoly_division_and_gcd():
    a = (T - 1) ** 2 * (T + 2)
    b = (T - 1) * (T + 5)
    quot, rem = divmod(a, b)
    assert quot * b + rem == a
    assert poly_gcd(a, b) == T - 1
    with pytest.raises(ZeroDivisionError):
        divmod(a, UniPoly())


def test_squarefree_examples():
    assert squarefree_decomposition((T - 1) ** 2) == [(T - 1, 2)]
    assert squarefree_decomposition(T ** 3 - T) == [(T ** 3 - T, 1)]
    with pytest.raises(ValueError):
        squarefree_decomposition(UniPoly())


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(1, 3)), min_size=1, max_size=4, unique_by=lambda x: x[0]))
def test_squarefree_reassembles(factors):
    p = UniPoly([1])
    for r, m in factors:
        p = p * (T - r) ** m
    parts = squarefree_decomposition(p)
    back = UniPoly([1])
    for f, m in parts:
        assert poly_gcd(f, f.derivative()).degree == 0
        back = back * f ** m
    assert back == p.monic()
    for (f, _), (g, _) in zip(parts, parts[1:]):
        assert poly_gcd(f, g).degree == 0


def test_roots_of_t2_plus_1():
    roots = complex_roots(T ** 2 + 1)
    assert [(r.re, r.im) for r in roots] == [(0.0, -1.0), (0.0, 1.0)]


def test_roots_of_cyclotomic_factor():
    roots = complex_roots(T ** 2 - T + 1)
    for r in roots:
        assert abs(r.re - 0.5) < 1e-12
        assert abs(abs(r.im) - 0.866025403784439) < 1e-12


def test_root_finder_arguments():
    with pytest.raises(ValueError):
        complex_roots(T - 1, tol=0)
    with pytest.raises(ValueError):
        complex_roots(UniPoly())
    with pytest.raises(RootFindingError):
        complex_roots(T ** 9 - 35 * T ** 4 + 1, max_iter=0)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6, unique=True))
def test_roots_reconstruct_within_tolerance(rs):
    tol = 1e-12
    p = UniPoly.from_roots(rs) * (T ** 2 + T + 1)
    roots = complex_roots(p, tol=tol)
    for r in roots:
        assert relative_residual(p, r.value) < tol
    coeffs = reconstruct(roots)
    norm = max(abs(float(c)) for c in p.coeffs)
    assert max(abs(a - float(b)) for a, b in zip(coeffs, p.coeffs)) < 10 * tol * norm
    # conjugate symmetry and canonical order
    assert [(r.re, r.im) for r in roots] == sorted((r.re, r.im) for r in roots)
    nonreal = [r for r in roots if r.im]
    assert sorted((r.re, -r.im) for r in nonreal) == sorted((r.re, r.im) for r in nonreal)


def test_interpolate_exact():
    p = UniPoly([Fraction(1, 3), -2, 0, 5])
    xs = [0, 1, 2, Fraction(1, 2)]
    assert interpolate(xs, [p(x) for x in xs]) == p
    with pytest.raises(ValueError):
        interpolate([1, 1], [2, 3])


def test_relative_residual_exact_at_root():
    assert relative_residual(T - 2, complex(2, 0)) == 0.0
    assert math.isclose(relative_residual(T ** 2 + 1, 1j), 0.0, abs_tol=1e-300)
