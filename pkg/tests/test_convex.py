import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cubeplane.constructions import build_H, build_R
from cubeplane.convex import (
    ConvexDrawing,
    count_crossings,
    crossing_formula,
    crossing_set,
    edge_length,
    edges_cross,
    interval,
    irregular_pair,
    length_profile,
    length_rotation,
    relabel,
    weakly_isomorphic,
    weakly_isomorphic_up_to_automorphism,
)
from cubeplane.hypercube import CubeAutomorphism, HypercubeGraph, parse_label


def _drawing(labels, d):
    return ConvexDrawing([parse_label(x) for x in labels.split()], HypercubeGraph(d).edges, d)


def _naive_crossings(D):
    # independent oracle: endpoints interleave on the circle
    count = 0
    for (a, b), (c, e) in combinations(D.edges, 2):
        if {a, b} & {c, e}:
            continue
        pa, pb = sorted((D.pos[a], D.pos[b]))
        inside = [pa < D.pos[x] < pb for x in (c, e)]
        count += inside[0] != inside[1]
    return count


def random_order(d, rng):
    order = list(range(1 << d))
    rng.shuffle(order)
    return ConvexDrawing(order, HypercubeGraph(d).edges, d)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        ConvexDrawing([0, 1, 1], [(0, 1)])
    with pytest.raises(ValueError):
        ConvexDrawing([0, 1, 2], [(0, 3)])
    with pytest.raises(ValueError):
        ConvexDrawing([0, 1, 2], [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        ConvexDrawing([0, 1], [(1, 1)])


def test_edge_length_examples():
    D = build_H(4)
    lengths = sorted({edge_length(D, e) for e in D.edges})
    assert lengths == [4, 6, 7]
    assert max(edge_length(D, e) for e in D.edges) <= D.n // 2
    with pytest.raises(KeyError):
        edge_length(D, (0, 3))


def test_interval_walks_clockwise():
    D = _drawing("000 110 001 100 011 101 010 111", 3)
    assert [D.label(v) for v in interval(D, 0, parse_label("100"))] == ["000", "110", "001", "100"]
    assert [D.label(v) for v in interval(D, 0, parse_label("100"), closed=False)] == ["110", "001"]
    with pytest.raises(ValueError):
        interval(D, 0, 0)


def test_crossing_basics():
    # square with both diagonals
    D = ConvexDrawing([0, 1, 2, 3], [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)])
    assert edges_cross(D, (0, 2), (1, 3))
    assert not edges_cross(D, (0, 1), (2, 3))
    assert not edges_cross(D, (0, 2), (0, 1))
    assert count_crossings(D) == 1


@pytest.mark.parametrize("d", range(2, 6))
def test_count_matches_naive_oracle(d):
    rng = random.Random(d)
    for D in [build_H(d), build_R(d)] + [random_order(d, rng) for _ in range(5)]:
        assert count_crossings(D) == _naive_crossings(D)


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_crossing_is_symmetric_and_ignores_adjacent(seed):
    D = random_order(3, random.Random(seed))
    for e, f in combinations(D.edges, 2):
        assert edges_cross(D, e, f) == edges_cross(D, f, e) == edges_cross(D, e[::-1], f)
        if set(e) & set(f):
            assert not edges_cross(D, e, f)


@given(st.integers(0, 10**6), st.integers(0, 15))
@settings(max_examples=30, deadline=None)
def test_rotation_and_reflection_keep_crossings(seed, shift):
    D = random_order(4, random.Random(seed))
    rotated = ConvexDrawing(D.order[shift:] + D.order[:shift], D.edges, 4)
    mirrored = ConvexDrawing(D.order[::-1], D.edges, 4)
    assert crossing_set(rotated) == crossing_set(D) == crossing_set(mirrored)


def test_profiles_of_known_drawings():
    assert length_profile(build_H(3)) == (3, 2, 2)
    assert length_profile(build_H(4)) == (7, 6, 4, 4)
    assert length_profile(build_R(4)) == (8, 7, 6, 4)


def test_irregular_drawing_reports_a_witness_pair():
    # the identity order happens to be length-regular with profile (4, 2, 1)
    assert length_profile(ConvexDrawing(range(8), HypercubeGraph(3).edges, 3)) == (4, 2, 1)
    D = ConvexDrawing([0, 1, 2, 4, 3, 5, 6, 7], HypercubeGraph(3).edges, 3)
    assert length_profile(D) is None
    u, v = irregular_pair(D)
    assert u != v


def test_crossing_formula_examples():
    assert crossing_formula((3, 2, 2), 8) == 20
    assert crossing_formula((8, 7, 6, 4), 16) == 284
    assert crossing_formula((1, 1), 4) == 0
    with pytest.raises(ValueError):
        crossing_formula((1, 2), 4)
    with pytest.raises(ValueError):
        crossing_formula((2, 1), 3)
    with pytest.raises(ValueError):
        crossing_formula((2, 1), 2)


@pytest.mark.parametrize("d", range(2, 8))
def test_formula_equals_brute_force(d):
    for D in (build_H(d), build_R(d)):
        assert count_crossings(D) == crossing_formula(length_profile(D), D.n)


def test_length_rotation_examples():
    H5 = build_H(5)
    assert length_rotation(H5, parse_label("00000")) == (1, 1, 1)
    assert length_rotation(H5, parse_label("10110")) == (-1, 1, -1)
    H3 = build_H(3)
    assert length_rotation(H3, parse_label("110")) == (-1,)
    assert length_rotation(H3, parse_label("111")) == (-1,)


def test_length_rotation_errors():
    with pytest.raises(ValueError):
        length_rotation(ConvexDrawing([0, 1, 2], [(0, 1)]), 0)
    # two edges of equal length above the threshold
    D = build_H(4)
    with pytest.raises(ValueError):
        length_rotation(D, 0, threshold=3)
    # an antipodal chord has no side
    R = build_R(3)
    with pytest.raises(ValueError):
        length_rotation(R, 0, threshold=1)


def test_weak_isomorphism():
    H = build_H(3)
    assert weakly_isomorphic(H, ConvexDrawing(H.order[3:] + H.order[:3], H.edges, 3))
    assert not weakly_isomorphic(H, build_R(3))
    with pytest.raises(ValueError):
        weakly_isomorphic(H, ConvexDrawing(range(8), [(0, 1)]))


def test_automorphic_relabel_is_detected():
    R = build_R(4)
    g = CubeAutomorphism((2, 0, 3, 1), 5)
    found = weakly_isomorphic_up_to_automorphism(R, relabel(R, g), 4)
    assert found is not None
    assert weakly_isomorphic(relabel(R, found), relabel(R, g))
    assert weakly_isomorphic_up_to_automorphism(build_H(4), R, 4) is None
