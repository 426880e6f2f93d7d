from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import all_partitions, frac_rank, mn_character
from wbrauer.combinatorics import Partition, contents, specht_dim
from wbrauer.linalg import identity, matmul, transpose
from wbrauer.specht import (act_permutation, build_specht, bubble_word, compose, inverse,
                            perm_sign, product_rep, transposition)

SHAPES_6 = [p for n in range(1, 7) for p in all_partitions(n)]


def cycle_type(p):
    seen, out = set(), []
    for k in range(len(p)):
        if k not in seen:
            n, j = 0, k
            while j not in seen:
                seen.add(j)
                j = p[j]
                n += 1
            out.append(n)
    return tuple(sorted(out, reverse=True))


def trace(m):
    return sum(m[i][i] for i in range(len(m)))


def test_trivial_and_sign_modules():
    rep = build_specht((4,))
    assert all(m == ((1,),) for m in rep.gen_matrices)
    assert build_specht((1, 1)).gen_matrices == (((-1,),),)


@pytest.mark.parametrize("shape", SHAPES_6)
def test_coxeter_relations(shape):
    rep = build_specht(shape)
    g = [list(map(list, m)) for m in rep.gen_matrices]
    one = identity(rep.dim)
    for i, a in enumerate(g):
        assert matmul(a, a) == one
        for j, b in enumerate(g):
            if j == i + 1:
                assert matmul(a, matmul(b, a)) == matmul(b, matmul(a, b))
            elif j > i + 1:
                assert matmul(a, b) == matmul(b, a)


@pytest.mark.parametrize("shape", SHAPES_6)
def test_form_is_invariant_and_nondegenerate(shape):
    rep = build_specht(shape)
    form = [list(r) for r in rep.form]
    assert form == transpose(form)
    for m in rep.gen_matrices:
        m = [list(r) for r in m]
        assert matmul(transpose(m), matmul(form, m)) == form
    assert frac_rank(form) == rep.dim


@pytest.mark.parametrize("n", range(1, 8))
def test_dimension_is_hook_count(n):
    for p in all_partitions(n):
        assert build_specht(p).dim == specht_dim(Partition(p))


@pytest.mark.parametrize("shape", [p for n in range(1, 6) for p in all_partitions(n)])
def test_characters_match_murnaghan_nakayama(shape):
    rep = build_specht(shape)
    n = sum(shape)
    for p in permutations(range(n)):
        assert trace(rep.act(p)) == mn_character(shape, cycle_type(p))


@pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2), (2, 1, 1), (3, 2)])
def test_word_action_equals_direct_action(shape):
    rep = build_specht(shape)
    for p in permutations(range(sum(shape))):
        assert rep.act(p) == rep.matrix_of(p)


@pytest.mark.parametrize("shape", [(2, 1), (3,), (2, 2)])
def test_transposition_sum_is_content_scalar(shape):
    rep = build_specht(shape)
    c = sum(contents(Partition(shape)))
    assert rep.transposition_sum() == [[c * x for x in row] for row in identity(rep.dim)]


def test_product_action_examples():
    rep = product_rep((2,), (1,))
    assert act_permutation(rep, (0, 1, 2)) == identity(1)
    assert act_permutation(rep, (1, 0, 2)) == identity(1)
    with pytest.raises(ValueError):
        act_permutation(rep, (2, 1, 0))


def test_product_left_and_right_commute():
    rep = product_rep((2, 1), (2, 1))
    for p in permutations(range(3)):
        for q in permutations(range(3)):
            left = act_permutation(rep, p + (3, 4, 5))
            right = act_permutation(rep, (0, 1, 2) + tuple(x + 3 for x in q))
            assert matmul(left, right) == matmul(right, left)
    assert rep.dim == 4


perm_st = st.integers(1, 6).flatmap(lambda n: st.permutations(range(n)).map(tuple))


@given(perm_st)
def test_bubble_word_reconstructs(p):
    n = len(p)
    q = tuple(range(n))
    for k in bubble_word(p):
        q = compose(transposition(n, k), q)
    assert q == p
    assert perm_sign(p) == (-1) ** len(bubble_word(p))
    assert compose(p, inverse(p)) == tuple(range(n))


@given(st.sampled_from([(2, 1), (2, 2), (3, 1, 1)]), st.data())
def test_action_is_a_homomorphism(shape, data):
    n = sum(shape)
    p = data.draw(st.permutations(range(n)).map(tuple))
    q = data.draw(st.permutations(range(n)).map(tuple))
    rep = build_specht(shape)
    assert rep.act(compose(p, q)) == matmul(rep.act(p), rep.act(q))


def test_bound():
    with pytest.raises(ValueError):
        build_specht((8,))


def test_rational_solve_is_integral():
    for p in all_partitions(5):
        for m in build_specht(p).gen_matrices:
            assert all(isinstance(x, int) or Fraction(x).denominator == 1 for row in m for x in row)
