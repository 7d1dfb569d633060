"""Explicit drawings of Q_d and the constructive plane subgraphs living in them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .convex import ConvexDrawing, edge_length, length_rotation, norm_edge
from .hypercube import MAX_DIMENSION, HypercubeGraph, parity
from .plane import PlaneSubgraphResult, path_edges, verify_plane

Edge = tuple[int, int]

# slot of each id in the 4-slot base drawings; id 1 is label "10", id 2 is "01"
_H_BASE = (0, 3, 1, 2)
_R_BASE = (0, 3, 2, 1)


class ConstructionError(RuntimeError):
    """A construction produced something that fails its own certificate."""


def _doubling_positions(d: int, base: tuple[int, ...]) -> list[int]:
    pos = list(base)
    for k in range(3, d + 1):
        shift = (1 << (k - 1)) - 1
        pos = [(2 * pos[v >> 1] + (v & 1) * shift) % (1 << k) for v in range(1 << k)]
    return pos


def _drawing_from_positions(d: int, pos: list[int]) -> ConvexDrawing:
    order = [0] * (1 << d)
    for v, p in enumerate(pos):
        order[p] = v
    return ConvexDrawing(order, HypercubeGraph(d).edges, d)


def _check_d(d: int, lo: int, hi: int = MAX_DIMENSION) -> None:
    if not lo <= d <= hi:
        raise ValueError(f"d must be in [{lo}, {hi}], got {d}")


def build_H(d: int) -> ConvexDrawing:
    """H_d: the copy of H_{d-1} for leading bit 1 is rotated just short of half a turn."""
    _check_d(d, 2)
    return _drawing_from_positions(d, _doubling_positions(d, _H_BASE))


def build_R(d: int) -> ConvexDrawing:
    """R_d: same doubling as H_d from the crossed base drawing of Q_2."""
    _check_d(d, 2)
    return _drawing_from_positions(d, _doubling_positions(d, _R_BASE))


@dataclass(frozen=True)
class ParallelPairs:
    partner: dict[Edge, Edge]

    def pairs(self) -> list[tuple[Edge, Edge]]:
        return sorted({tuple(sorted((a, b))) for a, b in self.partner.items()})


def build_H_parallel(d: int) -> tuple[ConvexDrawing, ParallelPairs]:
    """H'_d: each vertex v_i gets a twin u_i right after it clockwise.

    Twins copy the edges among the v's, and v_i is joined to u_{i+h} and
    v_{i+h} to u_i (h = half the old vertex count); those two edges form a
    parallel pair. The v's take leading bit 0 and u_{i+h} takes leading bit 1
    with v_i's remaining label.
    """
    _check_d(d, 3, 12)
    base = build_H(2)
    order = list(base.order)
    edges = set(base.edges)
    partner: dict[Edge, Edge] = {}
    for k in range(3, d + 1):
        size = len(order)
        h = size // 2
        new = [0] * (2 * size)
        for i in range(size):
            new[2 * i] = 2 * order[i]
            new[2 * i + 1] = 1 + 2 * order[(i - h) % size]
        at = {v: i for i, v in enumerate(order)}
        nxt: set[Edge] = set()
        for a, b in edges:
            i, j = at[a], at[b]
            nxt.add(norm_edge(new[2 * i], new[2 * j]))
            nxt.add(norm_edge(new[2 * i + 1], new[2 * j + 1]))
        partner = {}
        for i in range(size):
            e = norm_edge(new[2 * i], new[2 * ((i + h) % size) + 1])
            f = norm_edge(new[2 * ((i + h) % size)], new[2 * i + 1])
            nxt.update((e, f))
            partner[e] = f
            partner[f] = e
        if nxt != set(HypercubeGraph(k).edges):
            raise ConstructionError(f"H'_{k} labeling does not give Q_{k}")
        order, edges = new, nxt
    return ConvexDrawing(order, edges, d), ParallelPairs(partner)


def build_bipartite_split(d: int) -> ConvexDrawing:
    """Even-parity ids on one arc, odd-parity ids on the other, both ascending."""
    _check_d(d, 2)
    n = 1 << d
    order = [v for v in range(n) if parity(v) == 0] + [v for v in range(n) if parity(v) == 1]
    return ConvexDrawing(order, HypercubeGraph(d).edges, d)


def claim_x(k: int) -> int:
    """x_k in [0, 2**k) with bit i of (x_k - i) equal to 0 for every i < k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    x = 0
    for j in range(1, k):
        if x - j == -1:
            x = j - 1 + (1 << j)
    return x


def claim_x_holds(x: int, k: int) -> bool:
    return 0 <= x < (1 << k) and all(not ((x - i) >> i) & 1 for i in range(k))


def crmax_lower_bound(d: int) -> int:
    _check_d(d, 2, 10**6)
    return 2 ** (d - 2) * (2 ** (d - 1) * (d * d - 2 * d + 3) - d * d - 1)


def _other(e: Edge, v: int) -> int:
    return e[1] if e[0] == v else e[0]


def _edges_of_length(D: ConvexDrawing, v: int, length: int) -> list[Edge]:
    return sorted(e for e in D.incident[v] if edge_length(D, e) == length)


def _clockwise_edge(D: ConvexDrawing, v: int, length: int) -> Edge:
    """The edge at v of the given length whose far end is that many slots clockwise."""
    for e in _edges_of_length(D, v, length):
        if D.cw(v, _other(e, v)) == length:
            return e
    raise ConstructionError(f"vertex {D.label(v)} has no clockwise edge of length {length}")


def construct_plane_matching(d: int) -> tuple[PlaneSubgraphResult, PlaneSubgraphResult]:
    """Plane matching on 2d-4 edges and plane subgraph on 2d-2 edges in H_d."""
    _check_d(d, 3)
    D = build_H(d)
    n = D.n
    half = n // 2
    x = claim_x(d - 2)
    v0 = x
    w0 = x | (1 << (d - 2)) | (1 << (d - 1))
    matching: list[Edge] = []
    for start in (v0, w0):
        p = D.pos[start]
        for i in range(1, d - 1):
            vi = D.order[(p + i) % n]
            matching.append(_clockwise_edge(D, vi, half - (1 << i)))
    longest = half - 1
    pair = [_edges_of_length(D, v, longest)[0] for v in (v0, w0)]
    m_res = PlaneSubgraphResult("matching", matching, meta={"v0": D.label(v0), "w0": D.label(w0)})
    s_res = PlaneSubgraphResult("subgraph", matching + pair, meta=dict(m_res.meta))
    for res in (m_res, s_res):
        res.verified = verify_plane(D, res.edges, res.kind)
        if not res.verified:
            raise ConstructionError(f"{res.kind} construction for d={d} is not plane")
    return m_res, s_res


def _alternating(d: int, sign: int) -> tuple[int, ...]:
    return tuple(sign * (1 if i % 2 == 0 else -1) for i in range(d - 2))


def construct_long_plane_path(d: int) -> PlaneSubgraphResult:
    """Plane path with 2d-3 edges in H_d, zig-zagging out from a longest edge.

    Start at a vertex with alternating length-rotation, take its longest edge,
    then extend both ends by the edges of the next lengths down, and finish with
    one of the two shortest edges at each end. The sign conventions are only
    pinned down for odd d, so both global signs and all end choices are tried
    in a fixed order and the first certified path wins.
    """
    _check_d(d, 4)
    D = build_H(d)
    half = D.n // 2
    shortest = D.n // 4
    tried = 0
    for sign in (1, -1):
        target = _alternating(d, sign)
        starts = [v for v in D.order if length_rotation(D, v) == target]
        for v0 in sorted(starts):
            first = _edges_of_length(D, v0, half - 1)[0]
            walk = [v0, _other(first, v0)]
            for m in range(1, d - 2):
                length = half - (1 << m)
                s, t = walk[0], walk[-1]
                es = _edges_of_length(D, s, length)[0]
                et = _edges_of_length(D, t, length)[0]
                walk = [_other(es, s)] + walk + [_other(et, t)]
            s, t = walk[0], walk[-1]
            ends_s = sorted(_edges_of_length(D, s, shortest), key=lambda e: D.cw(s, _other(e, s)) < half)
            ends_t = sorted(_edges_of_length(D, t, shortest), key=lambda e: D.cw(t, _other(e, t)) < half)
            for es, et in itertools.product(ends_s, ends_t):
                tried += 1
                full = [_other(es, s)] + walk + [_other(et, t)]
                edges = path_edges(full)
                if verify_plane(D, edges, "path"):
                    return PlaneSubgraphResult(
                        "path",
                        edges,
                        verified=True,
                        vertices=full,
                        meta={"start": D.label(v0), "rotation": list(target), "attempts": tried},
                    )
    raise ConstructionError(f"no plane path of length {2 * d - 3} found in H_{d}")


def rotation_histogram(D: ConvexDrawing) -> dict[tuple[int, ...], list[int]]:
    """Vertices of D grouped by length-rotation."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in D.order:
        groups.setdefault(length_rotation(D, v), []).append(v)
    return groups


def rotation_lemma_checks(d: int) -> dict[str, bool]:
    """The three facts about length-rotations in H_d that the path construction uses.

    - every sign vector occurs at exactly 4 vertices, forming two antipodal pairs
    - vertex x has sign +1 at coordinate i exactly when x_i = 0 (i <= d - 2)
    - an edge of length 2**(d-1) - 2**m joins vertices whose rotations agree
      from coordinate m + 2 on
    """
    _check_d(d, 3)
    D = build_H(d)
    half = D.n // 2
    groups = rotation_histogram(D)
    counts = len(groups) == 2 ** (d - 2) and all(
        len(vs) == 4 and len({D.pos[v] % half for v in vs}) == 2 for vs in groups.values()
    )
    bits = all(
        length_rotation(D, v) == tuple(-1 if (v >> i) & 1 else 1 for i in range(d - 2)) for v in D.order
    )
    agree = True
    for e in D.edges:
        gap = half - edge_length(D, e)
        if gap <= 0 or gap & (gap - 1):
            continue
        m = gap.bit_length() - 1
        if length_rotation(D, e[0])[m + 1 :] != length_rotation(D, e[1])[m + 1 :]:
            agree = False
    return {"four_per_vector_antipodal": counts, "sign_is_bit_formula": bits, "neighbours_agree": agree}
