from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import all_partitions, lr_by_characters, syt_count_brute
from wbrauer.combinatorics import (Bipartition, Box, Partition, add_box, addable_boxes,
                                   content_count, content_sum, contents, dominates, lr_coefficient,
                                   lr_tableaux, p_regular, partitions, remove_box,
                                   removable_boxes, specht_dim, standard_tableaux)


def parts_of(n):
    return [Partition(p) for p in all_partitions(n)]


partition_st = st.integers(0, 8).flatmap(lambda n: st.sampled_from(parts_of(n)))


def B(r, c):
    return Box(r, c)


def test_removable_examples():
    assert removable_boxes(Partition()) == set()
    assert removable_boxes(Partition((2, 2))) == {B(2, 2)}
    assert removable_boxes(Partition((3, 2, 1))) == {B(1, 3), B(2, 2), B(3, 1)}


def test_addable_examples():
    assert addable_boxes(Partition()) == {B(1, 1)}
    assert addable_boxes(Partition((1,))) == {B(1, 2), B(2, 1)}
    assert addable_boxes(Partition((2, 2))) == {B(1, 3), B(3, 1)}


def _valid_after(p, f):
    try:
        Partition(f(p))
    except ValueError:
        return False
    return True


@given(partition_st)
def test_removable_and_addable_by_brute_force(p):
    rows = list(p) + [0]
    removable = {B(i + 1, rows[i]) for i in range(len(p))
                 if _valid_after(rows, lambda r: r[:i] + [r[i] - 1] + r[i + 1:])}
    addable = {B(i + 1, rows[i] + 1) for i in range(len(rows))
               if _valid_after(rows, lambda r: r[:i] + [r[i] + 1] + r[i + 1:])}
    assert removable_boxes(p) == removable
    assert addable_boxes(p) == addable
    if p:
        assert len(removable) == len(addable) - 1
    for b in removable:
        assert add_box(remove_box(p, b), b) == p


def test_content_count_examples():
    assert content_count(Partition((2, 2)), 0) == 2
    assert all(content_count(Partition(), i) == 0 for i in range(-3, 4))
    assert content_count(Partition((3, 1)), 1, 2) == 2


@given(partition_st, st.integers(-8, 8), st.sampled_from([2, 3, 5, 7]))
def test_content_count_mod_p_sums_exact_counts(p, i, prime):
    exact = sum(content_count(p, j) for j in range(-10, 11) if (j - i) % prime == 0)
    assert content_count(p, i, prime) == exact


@given(partition_st)
def test_content_sum_matches_box_list(p):
    assert content_sum(p) == sum(contents(p))


def test_dominance_examples():
    assert dominates(Partition((2, 1)), Partition((1, 1, 1)))
    assert dominates(Partition((2, 1)), Partition((2, 1)))
    assert not dominates(Partition((2, 2)), Partition((3, 1)))
    with pytest.raises(ValueError):
        dominates(Partition((2,)), Partition((1,)))


def test_specht_dim_examples():
    assert specht_dim(Partition((5,))) == 1
    assert specht_dim(Partition((2, 1))) == 2
    assert specht_dim(Partition((3, 2))) == 5


@pytest.mark.parametrize("n", range(0, 7))
def test_hook_formula_counts_tableaux(n):
    for p in partitions(n):
        assert specht_dim(p) == syt_count_brute(p) == len(standard_tableaux(p))


def test_hook_formula_degree_eight():
    # brute-force filling is too slow here, so compare against the recursive count
    for p in partitions(8):
        assert specht_dim(p) == len(standard_tableaux(p))


def test_standard_tableaux_are_standard():
    for p in partitions(5):
        for t in standard_tableaux(p):
            for row in t.rows:
                assert list(row) == sorted(row)
            for c in range(p[0]):
                col = [row[c] for row in t.rows if c < len(row)]
                assert col == sorted(col)


def test_lr_examples():
    assert lr_coefficient(Partition((2,)), Partition((1,)), Partition((1,))) == 1
    assert lr_coefficient(Partition((1, 1)), Partition((1,)), Partition((1,))) == 1
    assert lr_coefficient(Partition((2, 1)), Partition((1,)), Partition((2,))) == 1
    assert lr_coefficient(Partition((3, 2, 1)), Partition((2, 1)), Partition((2, 1))) == 2
    assert lr_coefficient(Partition((3,)), Partition((1,)), Partition((1,))) == 0


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(4) if a + b <= 5])
def test_lr_against_characters(a, b):
    for mu in parts_of(a):
        for nu in parts_of(b):
            for lam in parts_of(a + b):
                assert lr_coefficient(lam, mu, nu) == lr_by_characters(lam, mu, nu)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(4)])
def test_induced_dimension_count(a, b):
    for mu in parts_of(a):
        for nu in parts_of(b):
            total = sum(lr_coefficient(lam, mu, nu) * specht_dim(lam) for lam in parts_of(a + b))
            assert total == comb(a + b, a) * specht_dim(mu) * specht_dim(nu)


def test_lr_tableaux_obey_the_lattice_rule():
    lam, mu, nu = Partition((3, 2, 1)), Partition((2, 1)), Partition((2, 1))
    tabs = list(lr_tableaux(lam, mu, nu))
    assert len(tabs) == 2
    for t in tabs:
        assert sorted(t.values()) == [1, 1, 2]


def test_p_regular_examples():
    assert not p_regular(Partition((1, 1)), 2)
    assert p_regular(Partition((1, 1, 1, 1)), 0)
    assert p_regular(Partition((2, 2, 1)), 3)


@given(partition_st, st.sampled_from([2, 3, 5]))
def test_p_regular_is_repeat_count(p, prime):
    assert p_regular(p, prime) == all(p.count(x) < prime for x in set(p))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))
    assert Partition((2, 1, 0)) == Partition((2, 1))


def test_bipartition_helpers():
    a = Bipartition.of((2, 1), (4,))
    b = Bipartition.of((2, 2), (3, 1))
    assert a.degrees == (3, 4)
    assert a.intersection(b) == Bipartition.of((2, 1), (3,))
    assert a.to_json() == {"left": [2, 1], "right": [4]}
    assert str(a) == "((2,1),(4))"


@given(partition_st)
def test_conjugate_is_an_involution(p):
    assert p.conjugate().conjugate() == p
    assert p.conjugate().degree == p.degree
