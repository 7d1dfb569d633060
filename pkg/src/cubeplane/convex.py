"""Convex-geometric drawings: a circular vertex order plus chords.

Positions 0..n-1 run clockwise around the hull. Two chords cross iff their
endpoints interleave, so nothing here needs coordinates.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .hypercube import CubeAutomorphism, enumerate_automorphisms, label

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class ConvexDrawing:
    """Vertices at clockwise positions ``0..n-1`` (``order[p]`` sits at p) and chords.

    ``d`` is set when the vertices are Q_d ids, so labels can be printed.
    """

    def __init__(self, order: Sequence[int], edges: Iterable[Sequence[int]], d: int | None = None):
        order = tuple(int(v) for v in order)
        pos = {v: i for i, v in enumerate(order)}
        if len(pos) != len(order):
            raise ValueError("circular order repeats a vertex")
        seen: set[Edge] = set()
        normed = []
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if u not in pos or v not in pos:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the drawing")
            e = norm_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            normed.append(e)
        self.order = order
        self.edges: tuple[Edge, ...] = tuple(sorted(normed))
        self.d = d
        self.pos = pos

    def __repr__(self) -> str:
        return f"ConvexDrawing(n={self.n}, m={len(self.edges)}, d={self.d})"

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConvexDrawing):
            return NotImplemented
        return (self.order, self.edges, self.d) == (other.order, other.edges, other.d)

    def __hash__(self) -> int:
        return hash((self.order, self.edges, self.d))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incident(self) -> dict[int, list[Edge]]:
        inc: dict[int, list[Edge]] = {v: [] for v in self.order}
        for u, v in self.edges:
            inc[u].append((u, v))
            inc[v].append((u, v))
        return inc

    def label(self, v: int) -> str:
        return label(v, self.d) if self.d is not None else str(v)

    def order_labels(self) -> list[str]:
        return [self.label(v) for v in self.order]

    def _check_edge(self, e: Sequence[int]) -> Edge:
        ne = norm_edge(*e)
        if ne not in self.edge_index:
            raise KeyError(f"unknown edge {tuple(e)}")
        return ne

    def cw(self, v: int, w: int) -> int:
        """Clockwise position distance from v to w."""
        return (self.pos[w] - self.pos[v]) % self.n

    def crosses(self, e: Sequence[int], f: Sequence[int]) -> bool:
        return edges_cross(self, e, f)

    @cached_property
    def _crossing_bool(self) -> np.ndarray:
        m = len(self.edges)
        if m == 0:
            return np.zeros((0, 0), dtype=bool)
        p = np.array([sorted((self.pos[u], self.pos[v])) for u, v in self.edges])
        a, b = p[:, 0], p[:, 1]
        a1, b1 = a[:, None], b[:, None]
        a2, b2 = a[None, :], b[None, :]
        return ((a1 < a2) & (a2 < b1) & (b1 < b2)) | ((a2 < a1) & (a1 < b2) & (b2 < b1))

    @cached_property
    def _masks(self) -> list[int]:
        return _bool_to_masks(self._crossing_bool)

    def crossing_masks(self) -> list[int]:
        """Per edge index, a bitmask of the edge indices it crosses."""
        return self._masks

    def crossing_pairs(self) -> list[tuple[int, int]]:
        i, j = np.nonzero(np.triu(self._crossing_bool))
        return list(zip(i.tolist(), j.tolist()))


def _bool_to_masks(mat: np.ndarray) -> list[int]:
    masks = []
    for row in mat:
        idx = np.flatnonzero(row)
        m = 0
        for j in idx.tolist():
            m |= 1 << j
        masks.append(m)
    return masks


def edge_length(D: ConvexDrawing, e: Sequence[int]) -> int:
    u, v = D._check_edge(e)
    cw = D.cw(u, v)
    return min(cw, D.n - cw)


def interval(D: ConvexDrawing, v: int, w: int, closed: bool = True) -> list[int]:
    """Vertices met walking clockwise from v to w."""
    if v not in D.pos or w not in D.pos:
        raise KeyError("vertex not in drawing")
    if v == w:
        raise ValueError("interval endpoints must differ")
    start = D.pos[v]
    steps = D.cw(v, w)
    out = [D.order[(start + k) % D.n] for k in range(steps + 1)]
    return out if closed else out[1:-1]


def edges_cross(D: ConvexDrawing, e: Sequence[int], f: Sequence[int]) -> bool:
    u, v = D._check_edge(e)
    x, y = D._check_edge(f)
    if {u, v} & {x, y}:
        return False
    span = D.cw(u, v)
    inside_x = 0 < D.cw(u, x) < span
    inside_y = 0 < D.cw(u, y) < span
    return inside_x != inside_y


def count_crossings(D: ConvexDrawing) -> int:
    return int(np.triu(D._crossing_bool).sum())


def crossing_set(D: ConvexDrawing) -> frozenset[frozenset[Edge]]:
    edges = D.edges
    return frozenset(frozenset((edges[i], edges[j])) for i, j in D.crossing_pairs())


def vertex_length_tuple(D: ConvexDrawing, v: int) -> tuple[int, ...]:
    return tuple(sorted((edge_length(D, e) for e in D.incident[v]), reverse=True))


def irregular_pair(D: ConvexDrawing) -> tuple[int, int] | None:
    """Two vertices whose length tuples differ, or None if D is length-regular."""
    first = D.order[0]
    ref = vertex_length_tuple(D, first)
    for v in D.order[1:]:
        if vertex_length_tuple(D, v) != ref:
            return first, v
    return None


def length_profile(D: ConvexDrawing) -> tuple[int, ...] | None:
    """The common descending length tuple, or None when D is not length-regular."""
    if irregular_pair(D) is not None:
        return None
    return vertex_length_tuple(D, D.order[0])


def default_rotation_threshold(D: ConvexDrawing) -> int:
    return D.n // 4


def length_rotation(D: ConvexDrawing, v: int, threshold: int | None = None) -> tuple[int, ...]:
    """Directions of the edges at v longer than ``threshold``, longest first.

    +1 means the far endpoint lies left of the diameter through v, seen from v
    looking at the centre; with clockwise positions that is a clockwise
    distance below n/2.
    """
    if D.n % 2:
        raise ValueError("length-rotation needs an even number of vertices")
    if threshold is None:
        threshold = default_rotation_threshold(D)
    long_edges = []
    for e in D.incident[v]:
        length = edge_length(D, e)
        if length > threshold:
            w = e[0] if e[1] == v else e[1]
            long_edges.append((length, w))
    lengths = [le for le, _ in long_edges]
    if len(set(lengths)) != len(lengths):
        raise ValueError(f"tied lengths above threshold at vertex {v}: {sorted(lengths)}")
    long_edges.sort(reverse=True)
    half = D.n // 2
    out = []
    for _, w in long_edges:
        cw = D.cw(v, w)
        if cw == half:
            raise ValueError(f"antipodal edge at vertex {v} has no direction")
        out.append(1 if cw < half else -1)
    return tuple(out)


def crossing_formula(profile: Sequence[int], n: int) -> int:
    """(n/2) * sum_i (l_i - 1)(i - 1/2) over the descending profile, exactly."""
    profile = tuple(profile)
    if any(a < b for a, b in zip(profile, profile[1:])):
        raise ValueError("profile must be descending")
    if n % 2:
        raise ValueError("number of vertices must be even")
    # (n/2) * (l-1) * (2i-1)/2, summed with i starting at 1
    num = n * sum((le - 1) * (2 * i - 1) for i, le in enumerate(profile, start=1))
    if num % 4:
        raise ValueError(f"profile {profile} with n={n} gives a non-integral crossing count")
    return num // 4


def relabel(D: ConvexDrawing, g: CubeAutomorphism | Sequence[int] | dict[int, int]) -> ConvexDrawing:
    """Same positions, every vertex v renamed to g(v)."""
    if isinstance(g, CubeAutomorphism):
        f = g
    elif isinstance(g, dict):
        f = g.__getitem__
    else:
        f = list(g).__getitem__
    return ConvexDrawing([f(v) for v in D.order], [(f(u), f(v)) for u, v in D.edges], D.d)


def weakly_isomorphic(D1: ConvexDrawing, D2: ConvexDrawing) -> bool:
    if set(D1.order) != set(D2.order) or set(D1.edges) != set(D2.edges):
        raise ValueError("drawings have different vertex or edge sets")
    return crossing_set(D1) == crossing_set(D2)


def weakly_isomorphic_up_to_automorphism(
    D1: ConvexDrawing, D2: ConvexDrawing, d: int
) -> CubeAutomorphism | None:
    """A cube automorphism g with g(D1) weakly isomorphic to D2, or None."""
    if d > 5:
        raise ValueError("automorphism search is limited to d <= 5")
    pairs1 = [(D1.edges[i], D1.edges[j]) for i, j in D1.crossing_pairs()]
    target = crossing_set(D2)
    if len(pairs1) != len(target):
        return None
    for g in enumerate_automorphisms(d):
        mp = g.mapping()
        for (a, b), (c, e) in pairs1:
            key = frozenset((norm_edge(mp[a], mp[b]), norm_edge(mp[c], mp[e])))
            if key not in target:
                break
        else:
            return g
    return None


def crossing_pair_labels(D: ConvexDrawing) -> Iterable[tuple[Edge, Edge]]:
    for i, j in D.crossing_pairs():
        yield D.edges[i], D.edges[j]

