"""Plane-subgraph certificates shared by constructions, peeling and the solvers."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Protocol, Sequence

Edge = tuple[int, int]
KINDS = ("path", "matching", "subgraph", "cycle")


class DrawnGraph(Protocol):
    """Anything with vertices, sorted normalized edges and a crossing relation."""

    vertices: Sequence[int]
    edges: Sequence[Edge]
    edge_index: dict[Edge, int]

    def crossing_masks(self) -> list[int]: ...

    def crosses(self, e: Sequence[int], f: Sequence[int]) -> bool: ...


@dataclass
class PlaneSubgraphResult:
    kind: str
    edges: list[Edge]
    verified: bool = False
    optimal: bool | None = None
    vertices: list[int] | None = None  # walk order for paths and cycles
    nodes: int = 0
    meta: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.edges)

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "size": self.size,
            "edges": [list(e) for e in self.edges],
            "verified": self.verified,
            "optimal": self.optimal,
        }
        if self.vertices is not None:
            out["vertices"] = list(self.vertices)
        if self.nodes:
            out["search_nodes"] = self.nodes
        if self.meta:
            out["meta"] = self.meta
        return out


def _norm(e: Sequence[int]) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


def _connected(edges: list[Edge]) -> bool:
    adj: dict[int, list[int]] = defaultdict(list)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if not adj:
        return True
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def has_shape(edges: Sequence[Sequence[int]], kind: str) -> bool:
    es = [_norm(e) for e in edges]
    if len(set(es)) != len(es):
        return False
    deg = Counter(v for e in es for v in e)
    if kind == "subgraph":
        return True
    if kind == "matching":
        return all(c == 1 for c in deg.values())
    if kind == "path":
        return (
            all(c <= 2 for c in deg.values())
            and len(deg) == len(es) + 1
            and _connected(es)
        ) or not es
    if kind == "cycle":
        return bool(es) and all(c == 2 for c in deg.values()) and _connected(es)
    raise ValueError(f"unknown kind {kind!r}")


def is_plane(D: DrawnGraph, edges: Sequence[Sequence[int]]) -> bool:
    es = []
    for e in edges:
        ne = _norm(e)
        if ne not in D.edge_index:
            raise KeyError(f"unknown edge {tuple(e)}")
        es.append(ne)
    # pairwise, so certifying a few edges never builds the full crossing table
    return not any(D.crosses(e, f) for i, e in enumerate(es) for f in es[i + 1 :])


def verify_plane(D: DrawnGraph, edges: Sequence[Sequence[int]], kind: str) -> bool:
    """Pairwise non-crossing and shaped like ``kind``."""
    return is_plane(D, edges) and has_shape(edges, kind)


def path_edges(vertices: Sequence[int]) -> list[Edge]:
    return [_norm((a, b)) for a, b in zip(vertices, vertices[1:])]
