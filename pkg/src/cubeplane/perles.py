"""Alternating left/right peeling and the plane path it certifies.

Seen from a vertex v, its chords are ordered by where their far endpoint
falls when sweeping clockwise from v. The rightmost chord reaches the first
such endpoint, the leftmost chord the last one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .convex import ConvexDrawing
from .plane import PlaneSubgraphResult, path_edges, verify_plane

Edge = tuple[int, int]
LEFT, RIGHT = "left", "right"


def _other(e: Edge, v: int) -> int:
    return e[1] if e[0] == v else e[0]


def stage_side(stage: int) -> str:
    """Stage 1 peels leftmost edges, then sides alternate."""
    return LEFT if stage % 2 == 1 else RIGHT


def extreme_edge(D: ConvexDrawing, v: int, live, side: str) -> Edge | None:
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    cands = [e for e in D.incident[v] if e in live]
    if not cands:
        return None
    key = lambda e: D.cw(v, _other(e, v))
    return max(cands, key=key) if side == LEFT else min(cands, key=key)


@dataclass
class PeelTrace:
    k: int
    sides: list[str] = field(default_factory=list)
    removed_at: dict[Edge, int] = field(default_factory=dict)
    # extremes[s - 1][v] is v's extreme edge in the drawing before stage s
    extremes: list[dict[int, Edge]] = field(default_factory=list)
    survivors: list[Edge] = field(default_factory=list)

    def removed_in(self, stage: int) -> list[Edge]:
        return sorted(e for e, s in self.removed_at.items() if s == stage)


def peel(D: ConvexDrawing, k: int) -> PeelTrace:
    if k < 1:
        raise ValueError("k must be >= 1")
    live = set(D.edges)
    trace = PeelTrace(k)
    for stage in range(1, k + 1):
        side = stage_side(stage)
        chosen: dict[int, Edge] = {}
        for v in D.order:
            e = extreme_edge(D, v, live, side)
            if e is not None:
                chosen[v] = e
        for e in set(chosen.values()):
            live.discard(e)
            trace.removed_at[e] = stage
        trace.sides.append(side)
        trace.extremes.append(chosen)
    trace.survivors = sorted(live)
    return trace


class PeelingError(AssertionError):
    """Path reconstruction broke an invariant the peeling argument relies on."""


def perles_path(D: ConvexDrawing) -> PlaneSubgraphResult:
    """A plane path with at least 2k+1 edges, k = floor((|E|-1)/n)."""
    m = len(D.edges)
    if m == 0:
        return PlaneSubgraphResult("path", [], verified=True, vertices=[])
    k = (m - 1) // D.n
    if k == 0:
        e = D.edges[0]
        return PlaneSubgraphResult("path", [e], verified=True, vertices=list(e), meta={"k": 0})
    trace = peel(D, k)
    if not trace.survivors:
        raise PeelingError(f"no edge survives {k} stages although |E| > k*n")
    u, v = trace.survivors[0]
    walk = [u, v]
    on_walk = {u, v}
    for stage in range(k, 0, -1):
        ext = trace.extremes[stage - 1]
        for at_front in (True, False):
            end = walk[0] if at_front else walk[-1]
            prev = walk[1] if at_front else walk[-2]
            g = ext.get(end)
            if g is None or _other(g, end) == prev:
                raise PeelingError(f"no extension at {end} in stage {stage}")
            w = _other(g, end)
            if w in on_walk:
                raise PeelingError(f"extension revisits vertex {w}")
            on_walk.add(w)
            if at_front:
                walk.insert(0, w)
            else:
                walk.append(w)
    edges = path_edges(walk)
    if not verify_plane(D, edges, "path"):
        raise PeelingError("reconstructed path is not plane")
    return PlaneSubgraphResult(
        "path", edges, verified=True, vertices=walk, meta={"k": k, "survivor": [u, v]}
    )
