"""Rectilinear drawings with exact integer geometry, and abstract simple drawings.

An abstract drawing is only the list of crossing edge pairs; every solver
works from that, so abstract, rectilinear and convex drawings are
interchangeable downstream.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .convex import ConvexDrawing, norm_edge
from .hypercube import HypercubeGraph, label as cube_label

Edge = tuple[int, int]
Point = tuple[int, int]

COORD_RANGE = 1 << 20
MAX_RESAMPLES = 1000


class DegenerateGeometry(ValueError):
    """Collinear touching or overlapping segments; regenerate the drawing."""


def orient(a: Point, b: Point, c: Point) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    """p collinear with a, b assumed; is it inside the closed box?"""
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Proper interior crossing of segments p1p2 and q1q2.

    Segments sharing an endpoint do not cross. A point of one segment lying
    on the other (touching or overlapping) raises DegenerateGeometry.
    """
    p1, p2, q1, q2 = (tuple(p) for p in (p1, p2, q1, q2))
    shared = {p1, p2} & {q1, q2}
    if shared:
        if p1 == p2 or q1 == q2 or len(shared) == 2:
            raise DegenerateGeometry("segments coincide")
        (s,) = shared
        a = p2 if p1 == s else p1
        b = q2 if q1 == s else q1
        if orient(s, a, b) == 0 and (_on_segment(a, s, b) or _on_segment(b, s, a)):
            raise DegenerateGeometry("segments overlap along a shared endpoint")
        return False
    o1, o2 = orient(p1, p2, q1), orient(p1, p2, q2)
    o3, o4 = orient(q1, q2, p1), orient(q1, q2, p2)
    for o, pt, a, b in ((o1, q1, p1, p2), (o2, q2, p1, p2), (o3, p1, q1, q2), (o4, p2, q1, q2)):
        if o == 0 and _on_segment(pt, a, b):
            raise DegenerateGeometry(f"point {pt} lies on segment {a}-{b}")
    return o1 * o2 < 0 and o3 * o4 < 0


class _CrossingMasks:
    """Shared DrawnGraph plumbing on top of a set of crossing index pairs."""

    edges: tuple[Edge, ...]

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def _pairs(self) -> Iterable[tuple[int, int]]:
        raise NotImplementedError

    @cached_property
    def _mask_list(self) -> list[int]:
        masks = [0] * len(self.edges)
        for i, j in self._pairs():
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return masks

    def crossing_masks(self) -> list[int]:
        return self._mask_list

    def crossing_pairs(self) -> list[tuple[int, int]]:
        return sorted((i, j) for i, m in enumerate(self._mask_list) for j in range(i + 1, len(self.edges)) if (m >> j) & 1)

    def crosses(self, e: Sequence[int], f: Sequence[int]) -> bool:
        i = self.edge_index[norm_edge(*e)]
        j = self.edge_index[norm_edge(*f)]
        return bool((self._mask_list[i] >> j) & 1)


class RectilinearDrawing(_CrossingMasks):
    def __init__(self, coords: dict[int, Point] | Sequence[Point], edges: Iterable[Sequence[int]], d: int | None = None):
        if not isinstance(coords, dict):
            coords = dict(enumerate(coords))
        self.coords: dict[int, Point] = {v: (int(p[0]), int(p[1])) for v, p in coords.items()}
        self.edges = tuple(sorted({norm_edge(*e) for e in edges}))
        self.d = d
        if len(set(self.coords.values())) != len(self.coords):
            raise DegenerateGeometry("two vertices share a point")
        for e in self.edges:
            if e[0] not in self.coords or e[1] not in self.coords:
                raise ValueError(f"edge {e} has an endpoint without coordinates")
            a, b = self.coords[e[0]], self.coords[e[1]]
            for v, p in self.coords.items():
                if v not in e and orient(a, b, p) == 0 and _on_segment(p, a, b):
                    raise DegenerateGeometry(f"vertex {v} lies on edge {e}")

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.coords))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RectilinearDrawing):
            return NotImplemented
        return self.coords == other.coords and self.edges == other.edges and self.d == other.d

    def __repr__(self) -> str:
        return f"RectilinearDrawing(n={len(self.coords)}, m={len(self.edges)})"

    def _pairs(self):
        c = self.coords
        for i, j in combinations(range(len(self.edges)), 2):
            (a, b), (u, v) = self.edges[i], self.edges[j]
            if {a, b} & {u, v}:
                continue
            if segments_cross(c[a], c[b], c[u], c[v]):
                yield i, j


@dataclass
class AbstractSimpleDrawing(_CrossingMasks):
    """A drawing known only through which edge pairs cross."""

    vertex_list: tuple[int, ...]
    edges: tuple[Edge, ...]
    crossings: frozenset[tuple[int, int]]
    d: int | None = None
    names: dict[int, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.vertex_list = tuple(sorted(self.vertex_list))
        es = tuple(norm_edge(*e) for e in self.edges)
        if list(es) != sorted(set(es)):
            raise ValueError("edges must be distinct and sorted")
        self.edges = es
        pairs = set()
        for i, j in self.crossings:
            i, j = min(i, j), max(i, j)
            if not 0 <= i < j < len(es):
                raise ValueError(f"crossing ({i}, {j}) out of range")
            if set(es[i]) & set(es[j]):
                raise ValueError(f"adjacent edges {es[i]} and {es[j]} cannot cross in a simple drawing")
            pairs.add((i, j))
        self.crossings = frozenset(pairs)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.vertex_list

    def _pairs(self):
        return iter(self.crossings)

    def name(self, v: int) -> str:
        if v in self.names:
            return self.names[v]
        return cube_label(v, self.d) if self.d else str(v)

    @classmethod
    def from_edge_pairs(cls, vertices, edges, crossing_edges, d=None, names=None) -> "AbstractSimpleDrawing":
        es = tuple(sorted({norm_edge(*e) for e in edges}))
        idx = {e: i for i, e in enumerate(es)}
        pairs = frozenset(
            (min(idx[norm_edge(*e)], idx[norm_edge(*f)]), max(idx[norm_edge(*e)], idx[norm_edge(*f)])) for e, f in crossing_edges
        )
        return cls(tuple(vertices), es, pairs, d, dict(names or {}))

    def crossing_edge_pairs(self) -> list[tuple[Edge, Edge]]:
        return [(self.edges[i], self.edges[j]) for i, j in sorted(self.crossings)]


def to_abstract(D: ConvexDrawing | RectilinearDrawing | AbstractSimpleDrawing) -> AbstractSimpleDrawing:
    if isinstance(D, AbstractSimpleDrawing):
        return D
    if isinstance(D, ConvexDrawing):
        pairs = D.crossing_pairs()
        verts = D.order
    else:
        pairs = D.crossing_pairs()
        verts = D.vertices
    return AbstractSimpleDrawing(tuple(verts), tuple(D.edges), frozenset(pairs), D.d)


def _general_position(points: Sequence[Point]) -> bool:
    if len(set(points)) != len(points):
        return False
    return all(orient(a, b, c) != 0 for a, b, c in combinations(points, 3))


def random_rectilinear(g: HypercubeGraph, seed: int) -> RectilinearDrawing:
    """Uniform integer points in [0, 2**20)^2, no three collinear."""
    rng = random.Random(seed)
    for _ in range(MAX_RESAMPLES):
        pts = [(rng.randrange(COORD_RANGE), rng.randrange(COORD_RANGE)) for _ in range(g.n)]
        if _general_position(pts):
            return RectilinearDrawing(dict(enumerate(pts)), g.edges, g.d)
    raise RuntimeError(f"no general-position sample in {MAX_RESAMPLES} attempts (seed {seed})")


def convex_realization(D: ConvexDrawing, seed: int, radius: int = 1 << 19) -> RectilinearDrawing:
    """Integer points in strictly convex position, visited clockwise in D's order.

    Angles are random but sorted and radii are jittered by up to 2%; samples
    that lose strict convexity after rounding are redrawn.
    """
    rng = random.Random(seed)
    n = D.n
    for _ in range(MAX_RESAMPLES):
        angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n))
        pts = []
        for a in angles:
            r = radius * (1 + rng.uniform(-0.02, 0.02))
            # decreasing angle is clockwise
            pts.append((round(radius + r * math.cos(-a)), round(radius + r * math.sin(-a))))
        if len(set(pts)) == n and all(orient(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) < 0 for i in range(n)):
            return RectilinearDrawing({v: pts[i] for i, v in enumerate(D.order)}, D.edges, D.d)
    raise RuntimeError(f"no convex sample in {MAX_RESAMPLES} attempts (seed {seed})")


# the Q_3 drawing with no plane 4-path: outer cycle a b c d, inner cycle a' b' c' d'
FIG7_NAMES = {0: "a", 1: "b", 3: "c", 2: "d", 4: "a'", 5: "b'", 7: "c'", 6: "d'"}
_ID = {name: v for v, name in FIG7_NAMES.items()}


def _e(x: str, y: str) -> Edge:
    return norm_edge(_ID[x], _ID[y])


FIG7_BLACK = tuple(_e(x, y) for x, y in (("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")))
FIG7_BLUE = tuple(_e(x, y) for x, y in (("a'", "b'"), ("b'", "c'"), ("c'", "d'"), ("d'", "a'")))
FIG7_RED = tuple(_e(x, x + "'") for x in "abcd")


def figure7_drawing() -> AbstractSimpleDrawing:
    pairs = [(r, s) for r, s in combinations(FIG7_RED, 2)]
    for x in "abcd":
        red = _e(x, x + "'")
        pairs += [(red, b) for b in FIG7_BLACK if _ID[x] not in b]
    pairs += [
        (_e("a", "a'"), _e("b'", "c'")),
        (_e("b", "b'"), _e("a'", "d'")),
        (_e("c", "c'"), _e("a'", "d'")),
        (_e("d", "d'"), _e("b'", "c'")),
        (_e("a", "b"), _e("c'", "d'")),
        (_e("c", "d"), _e("a'", "b'")),
        (_e("a", "d"), _e("a'", "d'")),
        (_e("b", "c"), _e("b'", "c'")),
    ]
    edges = FIG7_BLACK + FIG7_BLUE + FIG7_RED
    return AbstractSimpleDrawing.from_edge_pairs(range(8), edges, pairs, d=3, names=FIG7_NAMES)


@dataclass
class Figure7Report:
    checks: dict[str, bool]
    failures: list[str]
    longest_path: list[int]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": self.checks, "failures": self.failures, "longest_plane_path": self.longest_path}


def validate_figure7(A: AbstractSimpleDrawing) -> Figure7Report:
    """The properties the no-plane-4-path argument uses, plus the claim itself."""
    from .solvers import longest_plane_path

    checks: dict[str, bool] = {}
    failures: list[str] = []
    nm = lambda e: f"{FIG7_NAMES[e[0]]}{FIG7_NAMES[e[1]]}"

    def fail(key: str, msg: str) -> None:
        checks[key] = False
        failures.append(msg)

    if set(A.edges) != set(HypercubeGraph(3).edges):
        fail("is_Q3", "edge set is not Q_3")
        return Figure7Report(checks, failures, [])
    checks["is_Q3"] = True

    checks["red_pairwise_cross"] = True
    for r, s in combinations(FIG7_RED, 2):
        if not A.crosses(r, s):
            fail("red_pairwise_cross", f"red edges {nm(r)} and {nm(s)} do not cross")

    checks["red_crosses_two_far_black"] = True
    for r in FIG7_RED:
        hit = [b for b in FIG7_BLACK if A.crosses(r, b)]
        far = [b for b in FIG7_BLACK if not set(b) & set(r)]
        if sorted(hit) != sorted(far):
            fail("red_crosses_two_far_black", f"red {nm(r)} crosses black {[nm(b) for b in hit]}")

    checks["red_crosses_blue_cycle"] = True
    for r in FIG7_RED:
        if not any(A.crosses(r, b) for b in FIG7_BLUE):
            fail("red_crosses_blue_cycle", f"red {nm(r)} crosses no blue edge")
    if not A.crosses(_e("b", "b'"), _e("a'", "d'")):
        fail("red_crosses_blue_cycle", "bb' does not cross a'd'")

    # blue, blue, red, black: every such path must contain a crossing
    checks["two_blue_red_black_blocked"] = True
    blue_nbrs = {v: [] for v in range(4, 8)}
    for u, v in FIG7_BLUE:
        blue_nbrs[u].append(v)
        blue_nbrs[v].append(u)
    for x in "abcd":
        top, bottom = _ID[x + "'"], _ID[x]
        for mid in blue_nbrs[top]:
            for far in blue_nbrs[mid]:
                if far == top:
                    continue
                for black in FIG7_BLACK:
                    if bottom not in black:
                        continue
                    path = [norm_edge(far, mid), norm_edge(mid, top), norm_edge(top, bottom), black]
                    if not any(A.crosses(e, f) for e, f in combinations(path, 2)):
                        fail("two_blue_red_black_blocked", "plane path " + ",".join(nm(e) for e in path))

    best = longest_plane_path(A)
    checks["no_plane_path_of_length_4"] = best.size <= 3
    if best.size > 3:
        failures.append("plane path " + ",".join(FIG7_NAMES[v] for v in best.vertices) + f" has length {best.size}")
    return Figure7Report(checks, failures, list(best.vertices or []))
