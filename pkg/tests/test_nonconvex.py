import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cubeplane.constructions import build_H
from cubeplane.convex import ConvexDrawing
from cubeplane.hypercube import HypercubeGraph
from cubeplane.nonconvex import (
    FIG7_RED,
    AbstractSimpleDrawing,
    DegenerateGeometry,
    RectilinearDrawing,
    convex_realization,
    figure7_drawing,
    random_rectilinear,
    segments_cross,
    to_abstract,
    validate_figure7,
)
from cubeplane.solvers import longest_plane_path

coord = st.integers(-50, 50)
point = st.tuples(coord, coord)


def test_segment_examples():
    assert segments_cross((0, 0), (2, 2), (0, 2), (2, 0))
    assert not segments_cross((0, 0), (1, 0), (2, 0), (3, 0))
    assert not segments_cross((0, 0), (1, 1), (1, 1), (2, 0))
    with pytest.raises(DegenerateGeometry):
        segments_cross((0, 0), (2, 0), (1, 0), (1, 2))
    with pytest.raises(DegenerateGeometry):
        segments_cross((0, 0), (2, 0), (1, 0), (3, 0))
    with pytest.raises(DegenerateGeometry):
        segments_cross((0, 0), (2, 0), (0, 0), (1, 0))


def test_large_coordinates_are_exact():
    big = 2**31 - 1
    assert segments_cross((0, 0), (big, big - 1), (0, 1), (big, big - 2))


@given(point, point, point, point)
@settings(max_examples=300)
def test_segment_symmetries(p1, p2, q1, q2):
    def result(a, b, c, d):
        try:
            return segments_cross(a, b, c, d)
        except DegenerateGeometry:
            return "degenerate"

    r = result(p1, p2, q1, q2)
    assert r == result(q1, q2, p1, p2) == result(p2, p1, q1, q2) == result(p1, p2, q2, q1)


def test_rectilinear_rejects_vertex_on_edge():
    with pytest.raises(DegenerateGeometry):
        RectilinearDrawing({0: (0, 0), 1: (2, 0), 2: (1, 0)}, [(0, 1)])
    with pytest.raises(DegenerateGeometry):
        RectilinearDrawing({0: (0, 0), 1: (0, 0)}, [(0, 1)])


def test_random_rectilinear_contract():
    g = HypercubeGraph(3)
    D = random_rectilinear(g, 1)
    pts = list(D.coords.values())
    assert len(set(pts)) == 8
    assert all(0 <= x < 2**20 and 0 <= y < 2**20 for x, y in pts)
    assert random_rectilinear(g, 1) == D
    assert random_rectilinear(g, 2) != D


@pytest.mark.parametrize("d", [3, 4])
def test_geometric_and_combinatorial_predicates_agree(d):
    rng = random.Random(d)
    for seed in range(100):
        order = list(range(1 << d))
        rng.shuffle(order)
        D = build_H(d) if seed % 2 else ConvexDrawing(order, HypercubeGraph(d).edges, d)
        assert to_abstract(convex_realization(D, seed)).crossings == to_abstract(D).crossings


def test_to_abstract_examples():
    assert len(to_abstract(build_H(3)).crossings) == 20
    path = RectilinearDrawing({0: (0, 0), 1: (1, 0), 2: (2, 1)}, [(0, 1), (1, 2)])
    assert to_abstract(path).crossings == frozenset()


def test_abstract_rejects_adjacent_crossing():
    with pytest.raises(ValueError):
        AbstractSimpleDrawing((0, 1, 2), ((0, 1), (1, 2)), frozenset({(0, 1)}))
    with pytest.raises(ValueError):
        AbstractSimpleDrawing((0, 1, 2, 3), ((0, 1), (2, 3)), frozenset({(0, 5)}))


def test_rectilinear_q3_always_has_plane_4_path():
    g = HypercubeGraph(3)
    assert min(longest_plane_path(random_rectilinear(g, s)).size for s in range(200)) >= 4


def test_figure7_properties():
    A = figure7_drawing()
    rep = validate_figure7(A)
    assert rep.ok, rep.failures
    assert len(rep.longest_path) == 4
    assert sum(A.crosses(r, s) for r, s in combinations(FIG7_RED, 2)) == 6


def _mutate(A, drop):
    keep = frozenset(p for p in A.crossings if p not in drop)
    return AbstractSimpleDrawing(A.vertex_list, A.edges, keep, A.d, A.names)


def test_figure7_mutations_are_caught():
    A = figure7_drawing()
    r, s = FIG7_RED[0], FIG7_RED[1]
    pair = tuple(sorted((A.edge_index[r], A.edge_index[s])))
    rep = validate_figure7(_mutate(A, {pair}))
    assert not rep.checks["red_pairwise_cross"]
    empty = validate_figure7(_mutate(A, set(A.crossings)))
    assert not empty.checks["no_plane_path_of_length_4"]
    assert len(empty.longest_path) == 8


def test_figure7_needs_blue_black_crossings():
    # with no black/blue crossings some blue-blue-red-black path is plane
    A = figure7_drawing()
    black = {A.edge_index[e] for e in A.edges if e[0] < 4 and e[1] < 4}
    blue = {A.edge_index[e] for e in A.edges if e[0] >= 4}
    drop = {p for p in A.crossings if (p[0] in black and p[1] in blue) or (p[1] in black and p[0] in blue)}
    rep = validate_figure7(_mutate(A, drop))
    assert not rep.checks["two_blue_red_black_blocked"]
    assert not rep.checks["no_plane_path_of_length_4"]
