import math
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from goodcolor.core import (PointSet, enumerate_vertices, intersection_size, iter_masks,
                            popcount_table, vertex_from_index, vertex_index, vertex_masks)


def test_intersection_size_examples():
    x = PointSet.of(range(1, 8))
    assert intersection_size(x, PointSet.of(range(8, 15))) == 0
    assert intersection_size(x, x) == 7
    assert intersection_size(x, PointSet.of([5, 6, 7, 8, 9, 10, 11])) == 3


def test_pointset_bits():
    s = PointSet.of([1, 3, 14])
    assert s.mask == 0b10000000000101
    assert s.points() == [1, 3, 14]
    assert len(s) == 3
    assert 14 in s and 2 not in s
    assert s.within(14) and not s.within(13)
    with pytest.raises(ValueError):
        PointSet.of([0])
    with pytest.raises(ValueError):
        PointSet.of([65])


def test_enumerate_vertices_m14_k7():
    verts = enumerate_vertices(14, 7)
    assert len(verts) == 3432
    assert verts[0] == PointSet.of(range(1, 8))
    assert verts[-1] == PointSet.of(range(8, 15))
    masks = [v.mask for v in verts]
    assert masks == sorted(set(masks))
    assert all(len(v) == 7 for v in verts)


def test_enumeration_matches_brute_force():
    for m in range(0, 9):
        for k in range(0, m + 1):
            brute = sorted(sum(1 << (p - 1) for p in c) for c in combinations(range(1, m + 1), k))
            assert list(iter_masks(m, k)) == brute


def test_enumerate_rejects_k_above_m():
    with pytest.raises(ValueError):
        enumerate_vertices(5, 6)


def test_vertex_index_examples():
    assert vertex_index(PointSet.of(range(1, 8)), 14, 7) == 0
    # cross-checked against a linear scan of the enumeration
    verts = enumerate_vertices(14, 7)
    assert verts.index(PointSet.of(range(8, 15))) == 3431
    assert vertex_index(PointSet.of(range(8, 15)), 14, 7) == 3431


def test_vertex_index_agrees_with_scan():
    masks = vertex_masks(14, 7)
    for i in range(0, len(masks), 37):
        assert vertex_index(PointSet(int(masks[i])), 14, 7) == i
        assert vertex_from_index(i, 14, 7).mask == masks[i]


def test_vertex_index_rejects_wrong_size():
    with pytest.raises(ValueError):
        vertex_index(PointSet.of([1, 2]), 14, 7)
    with pytest.raises(IndexError):
        vertex_from_index(3432, 14, 7)


@given(st.integers(1, 40).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, m))),
       st.integers(0, 10**12))
def test_rank_roundtrip(mk, seed):
    m, k = mk
    i = seed % math.comb(m, k)
    assert vertex_index(vertex_from_index(i, m, k), m, k) == i


@given(st.integers(2, 30).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, m))),
       st.integers(0, 10**12), st.integers(0, 10**12))
def test_rank_is_monotone_in_mask(mk, a, b):
    m, k = mk
    total = math.comb(m, k)
    i, j = sorted((a % total, b % total))
    assert (vertex_from_index(i, m, k).mask <= vertex_from_index(j, m, k).mask)
    assert (i == j) == (vertex_from_index(i, m, k) == vertex_from_index(j, m, k))


@given(st.integers(0, (1 << 14) - 1), st.integers(0, (1 << 14) - 1))
def test_intersection_symmetric_and_bounded(a, b):
    x, y = PointSet(a), PointSet(b)
    assert intersection_size(x, y) == intersection_size(y, x) <= min(len(x), len(y))


def test_popcount_table():
    table = popcount_table(10)
    assert all(table[i] == bin(i).count("1") for i in range(1024))
