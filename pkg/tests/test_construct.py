import math
import random
from itertools import combinations

import numpy as np
import pytest

from goodcolor.construct import (IntersectionRule, base_color, build_affine_coloring,
                                 build_cyclic_coloring, build_intersection_coloring,
                                 intersection_size_counts)
from goodcolor.core import PointSet, intersection_size
from goodcolor.search import DifferenceSet, is_sum_free
from goodcolor.splitgraph import DEFAULT_CLASS0

X = PointSet.of(range(1, 8))
Y = PointSet.of(range(2, 9))
Z = PointSet.of(range(7, 14))


def test_base_color_examples(gs):
    assert base_color(X, Y, gs) == "r"
    assert base_color(X, Z, gs) == "b1"
    assert base_color(Y, Z, gs) == "b0"
    assert base_color(X, PointSet.of(range(8, 15)), gs) == "b0"
    with pytest.raises(ValueError):
        base_color(X, X, gs)


def test_m2_shape(m2_coloring):
    assert m2_coloring.N == 3432
    assert m2_coloring.labels == ("r", "b0", "b1")
    assert m2_coloring.ground == (14, 7)


def test_m2_degrees(m2_coloring):
    red = sum(math.comb(7, j) * math.comb(7, 7 - j) for j in range(3, 7))
    blue = sum(math.comb(7, j) * math.comb(7, 7 - j) for j in range(0, 3))
    assert (red, blue) == (2940, 491)
    deg = np.stack([(m2_coloring.matrix == l).sum(axis=1) for l in range(3)])
    assert np.all(deg[0] == 2940)
    assert np.all(deg[1] + deg[2] == 491)
    # one row counted directly
    row = [m2_coloring.color_name(0, v) for v in range(1, 3432)]
    assert row.count("r") == 2940


def test_m2_edge_counts_by_intersection(m2_coloring):
    expected = {j: 3432 * math.comb(7, j) * math.comb(7, 7 - j) // 2 for j in range(7)}
    assert list(expected.values()) == [1716, 84084, 756756, 2102100, 2102100, 756756, 84084]
    assert sum(expected.values()) == 5887596
    got = intersection_size_counts(m2_coloring)
    assert got == {**expected, 7: 0}


def test_m2_matches_base_color(gs, m2_coloring):
    rng = random.Random(1)
    for _ in range(2000):
        u, v = rng.sample(range(3432), 2)
        assert m2_coloring.color_name(u, v) == base_color(m2_coloring.vertex(u), m2_coloring.vertex(v), gs)


def test_no_blue_triangles_spot_check(m2_coloring):
    rng = np.random.default_rng(2)
    trip = rng.integers(0, 3432, size=(200000, 3))
    trip = trip[(trip[:, 0] != trip[:, 1]) & (trip[:, 1] != trip[:, 2]) & (trip[:, 0] != trip[:, 2])]
    m = m2_coloring.matrix
    blue = (m[trip[:, 0], trip[:, 1]] > 0) & (m[trip[:, 1], trip[:, 2]] > 0) & (m[trip[:, 0], trip[:, 2]] > 0)
    assert not blue.any()


def test_base_color_permutation_invariance(gs):
    rng = random.Random(9)
    for _ in range(50):
        perm = list(range(1, 15))
        rng.shuffle(perm)
        pi = dict(zip(range(1, 15), perm))
        g2 = gs.relabeled(pi)
        for _ in range(40):
            a = PointSet.of(rng.sample(range(1, 15), 7))
            b = PointSet.of(rng.sample(range(1, 15), 7))
            if a == b:
                continue
            assert base_color(a, b, gs) == base_color(PointSet.of(pi[p] for p in a),
                                                       PointSet.of(pi[p] for p in b), g2)


def test_generic_intersection_rule():
    rule = IntersectionRule({0: "far", 1: "near", 2: "near"}, k=2)
    c = build_intersection_coloring(5, 2, rule, ["far", "near"])
    assert c.N == 10
    # Kneser/Johnson split of K10: disjoint pairs form the Petersen graph, degree 3
    assert np.all((c.matrix == 0).sum(axis=1) == 3)
    with pytest.raises(ValueError):
        IntersectionRule({0: "a"}, k=1)


def test_cyclic_pentagon():
    c = build_cyclic_coloring(5, {"r": [1, 4], "b": [2, 3]})
    for x in range(5):
        assert c.color_name(x, (x + 1) % 5) == "r"
        assert c.color_name(x, (x + 2) % 5) == "b"
    for x, y in combinations(range(5), 2):
        assert c.color(x, y) == c.color((x + 1) % 5, (y + 1) % 5)


def test_cyclic_k17_matches_splitting_graph(k17):
    c = build_cyclic_coloring(17, {"b0": sorted(DEFAULT_CLASS0), "b1": [3, 5, 6, 7, 10, 11, 12, 14]})
    for x, y in combinations(range(17), 2):
        # residue r is point r + 1
        assert c.color_name(x, y) == k17.edge_color(x + 1, y + 1).label


def test_cyclic_rejects_bad_classes():
    with pytest.raises(ValueError):
        build_cyclic_coloring(5, {"r": [1], "b": [2, 3, 4]})
    with pytest.raises(ValueError):
        build_cyclic_coloring(5, {"r": [1, 4], "b": [2]})
    with pytest.raises(ValueError):
        build_cyclic_coloring(5, {"r": [1, 4, 2], "b": [2, 3]})


def _classes_are_disjoint_triangles(c, label, line_size):
    m = c.matrix == label
    seen = set()
    for v in range(c.N):
        line = frozenset([v, *np.flatnonzero(m[v]).tolist()])
        assert len(line) == line_size
        for u in line:
            if u != v:
                assert frozenset([u, *np.flatnonzero(m[u]).tolist()]) == line
        seen.add(line)
    return seen


def test_affine_q3():
    c = build_affine_coloring(3)
    assert c.N == 9 and len(c.labels) == 4
    for label in range(4):
        lines = _classes_are_disjoint_triangles(c, label, 3)
        assert len(lines) == 3


def test_affine_q2_matchings():
    c = build_affine_coloring(2)
    assert c.N == 4 and len(c.labels) == 3
    for label in range(3):
        assert len(_classes_are_disjoint_triangles(c, label, 2)) == 2


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_affine_degrees(q):
    c = build_affine_coloring(q)
    for label in range(q + 1):
        assert np.all((c.matrix == label).sum(axis=1) == q - 1)


def test_affine_rejects_non_prime():
    with pytest.raises(ValueError):
        build_affine_coloring(4)


def _blue_triangle_scan(c, blue_label):
    m = c.matrix == blue_label
    return any(m[x, y] and m[y, z] and m[x, z] for x, y, z in combinations(range(c.N), 3))


@pytest.mark.parametrize("modulus", range(5, 23))
def test_cyclic_blue_triangle_free_iff_sum_free(modulus):
    rng = random.Random(modulus)
    orbits = sorted({tuple(sorted({d, modulus - d})) for d in range(1, modulus)})
    for _ in range(6):
        chosen = [o for o in orbits if rng.random() < 0.4]
        blue = sorted({d for o in chosen for d in o})
        if not blue or len(blue) == modulus - 1:
            continue
        red = sorted(set(range(1, modulus)) - set(blue))
        c = build_cyclic_coloring(modulus, {"r": red, "b": blue})
        assert (not _blue_triangle_scan(c, 1)) == is_sum_free(DifferenceSet(modulus, blue))


def test_intersection_sizes_needs_metadata():
    with pytest.raises(ValueError):
        intersection_size_counts(build_affine_coloring(3))


def test_j_edge_points(gs, m2_coloring):
    i = m2_coloring.index_of(X)
    j = m2_coloring.index_of(PointSet.of([6, 7, 8, 9, 10, 11, 12]))
    assert intersection_size(m2_coloring.vertex(i), m2_coloring.vertex(j)) == 2
    assert m2_coloring.color_name(i, j) == gs.edge_color(6, 7).label
