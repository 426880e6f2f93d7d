from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import frac_rank, leibniz_det
from wbrauer.linalg import SparseEchelon, bareiss_det, integer_roots, rank, row_reduce
from wbrauer.scalars import (GF, ContextMismatch, Poly, PrimeField, RationalDelta, Symbolic,
                             is_prime, make_context)

coeff_lists = st.lists(st.integers(-20, 20), max_size=5)
polys = coeff_lists.map(Poly)


def small_matrix(n, lo=-6, hi=6):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)


@given(polys, polys, polys)
def test_poly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == Poly()


@given(polys, polys, st.integers(-7, 7))
def test_poly_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(polys, polys)
def test_exact_division_inverts_multiplication(a, b):
    if b:
        assert (a * b).exact_div(b) == a


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        Poly((1, 0, 1)).exact_div(Poly((0, 2)))


def test_poly_printing():
    assert str(Poly.delta() ** 2 - 1) == "-1 + delta^2"
    assert str(Poly()) == "0"


def test_prime_field_arithmetic():
    a = GF(3, 7)
    assert a * a.inverse() == GF(1, 7)
    assert a / 3 == GF(1, 7)
    with pytest.raises(ContextMismatch):
        a + GF(1, 5)


def test_make_context_variants():
    assert make_context("symbolic") == Symbolic()
    assert make_context("1/2") == RationalDelta(Fraction(1, 2))
    assert make_context(7, 5) == PrimeField(5, 2)
    assert make_context("1/2", 5).delta == GF(3, 5)
    with pytest.raises(ValueError):
        make_context("symbolic", 3)
    with pytest.raises(ValueError):
        make_context("1/5", 5)


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


@given(st.integers(1, 4).flatmap(small_matrix))
def test_bareiss_matches_leibniz(a):
    assert bareiss_det(a) == leibniz_det(a)


@given(st.integers(1, 3).flatmap(lambda n: st.lists(st.lists(coeff_lists.map(Poly), min_size=n,
                                                               max_size=n), min_size=n, max_size=n)),
       st.integers(-4, 4))
def test_polynomial_determinant_specialises(a, x):
    det = bareiss_det(a)
    if not isinstance(det, Poly):
        det = Poly((det,))
    assert det(x) == leibniz_det([[p(x) for p in row] for row in a])


@given(st.integers(1, 4).flatmap(lambda n: small_matrix(n, -2, 2)))
def test_rank_agrees_with_plain_elimination(a):
    rows = [[Fraction(x) for x in row] for row in a]
    assert rank(rows) == frac_rank(a)
    ech = SparseEchelon()
    for row in rows:
        ech.add(dict(enumerate(row)))
    assert ech.rank == frac_rank(a)


def test_row_reduce_pivots():
    red, piv = row_reduce([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
    assert piv == [0] and red == [[1, 2]]


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=4), st.integers(-3, 3))
def test_integer_roots_of_products(roots, extra):
    poly = Poly((extra or 1,))
    for r in roots:
        poly = poly * Poly((-r, 1))
    found = integer_roots(poly)
    assert set(found) == set(roots)
    # brute force over a window wide enough to contain every root
    assert set(found) == {x for x in range(-40, 41) if poly(x) == 0}


def test_integer_roots_rejects_zero():
    with pytest.raises(ValueError):
        integer_roots(Poly())
