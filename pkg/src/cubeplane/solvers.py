"""Exact search for plane subgraphs, paths, matchings, cycles and the spider G_0.

All solvers work on edge indices and bitmasks, so any drawing that exposes
``edges``, ``edge_index`` and ``crossing_masks()`` can be searched.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .plane import DrawnGraph, PlaneSubgraphResult, path_edges, verify_plane

Edge = tuple[int, int]


class BudgetExceeded(Exception):
    pass


@dataclass
class Budget:
    time_limit: float | None = None
    node_limit: int | None = None

    def start(self) -> "_Clock":
        return _Clock(self)


class _Clock:
    def __init__(self, budget: Budget):
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
        self.node_limit = budget.node_limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceeded("node limit")
        if self.deadline is not None and not self.nodes & 1023 and time.monotonic() > self.deadline:
            raise BudgetExceeded("time limit")


UNLIMITED = Budget()


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def incidence_masks(D: DrawnGraph) -> dict[int, int]:
    inc: dict[int, int] = {v: 0 for v in D.vertices}
    for i, (u, v) in enumerate(D.edges):
        inc[u] |= 1 << i
        inc[v] |= 1 << i
    return inc


def conflict_masks(D: DrawnGraph, mode: str) -> list[int]:
    """Edges that may not be chosen together with each edge.

    mode "subgraph": crossing edges; mode "matching": crossing or adjacent edges.
    """
    masks = list(D.crossing_masks())
    if mode == "subgraph":
        return masks
    if mode != "matching":
        raise ValueError(f"unknown conflict mode {mode!r}")
    inc = incidence_masks(D)
    out = []
    for i, (u, v) in enumerate(D.edges):
        out.append((masks[i] | inc[u] | inc[v]) & ~(1 << i))
    return out


def _max_independent_set(conflict: list[int], clock: _Clock, upper_hint: int | None) -> list[int]:
    """Branch and bound for a maximum independent set of the conflict graph.

    Implemented as maximum clique in the complement with a greedy colouring
    bound; each colour class of the complement is a clique of the conflict
    graph, so the bound is a clique cover.
    """
    m = len(conflict)
    if m == 0:
        return []
    # relabel so that bit order follows descending conflict degree, ties by edge index
    order = sorted(range(m), key=lambda i: (-conflict[i].bit_count(), i))
    rank = {e: r for r, e in enumerate(order)}
    full = (1 << m) - 1
    compat = [0] * m
    for r, e in enumerate(order):
        cm = 0
        for j in _bits(conflict[e]):
            cm |= 1 << rank[j]
        compat[r] = full & ~cm & ~(1 << r)

    # greedy start: repeatedly take the remaining vertex with fewest conflicts
    best: list[int] = []
    cand = full
    while cand:
        r = max(_bits(cand))
        best.append(r)
        cand &= compat[r]
    if upper_hint is not None and len(best) >= upper_hint:
        return [order[r] for r in best]

    def colour_sort(P: int) -> list[tuple[int, int]]:
        out = []
        colour = 0
        while P:
            colour += 1
            Q = P
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= ~compat[v] & ~low
                P &= ~low
                out.append((v, colour))
        return out

    class _Done(Exception):
        pass

    def expand(R: list[int], P: int) -> None:
        nonlocal best
        clock.tick()
        coloured = colour_sort(P)
        for v, colour in reversed(coloured):
            if len(R) + colour <= len(best):
                return
            R.append(v)
            newP = P & compat[v]
            if newP:
                expand(R, newP)
            elif len(R) > len(best):
                best = list(R)
                if upper_hint is not None and len(best) >= upper_hint:
                    raise _Done
            R.pop()
            P &= ~(1 << v)

    try:
        expand([], full)
    except _Done:
        pass
    return [order[r] for r in best]


def _mis_result(D: DrawnGraph, mode: str, kind: str, upper_hint, budget: Budget) -> PlaneSubgraphResult:
    conflict = conflict_masks(D, mode)
    clock = budget.start()
    holder: list[int] = []
    optimal = True
    try:
        holder = _max_independent_set(conflict, clock, upper_hint)
    except BudgetExceeded as exc:
        optimal = False
        holder = _greedy_independent(conflict)
        reason = str(exc)
    edges = sorted(D.edges[i] for i in holder)
    res = PlaneSubgraphResult(kind, edges, verified=verify_plane(D, edges, kind), optimal=optimal, nodes=clock.nodes)
    if upper_hint is not None:
        res.meta["upper_hint"] = upper_hint
        if res.size >= upper_hint:
            res.meta["stopped_at_hint"] = True
    if not optimal:
        res.meta["budget_exceeded"] = reason
    return res


def _greedy_independent(conflict: list[int]) -> list[int]:
    chosen, blocked = [], 0
    for i in sorted(range(len(conflict)), key=lambda i: (conflict[i].bit_count(), i)):
        if not (blocked >> i) & 1:
            chosen.append(i)
            blocked |= conflict[i] | (1 << i)
    return chosen


def max_plane_subgraph(D: DrawnGraph, upper_hint: int | None = None, budget: Budget = UNLIMITED) -> PlaneSubgraphResult:
    return _mis_result(D, "subgraph", "subgraph", upper_hint, budget)


def max_plane_matching(D: DrawnGraph, upper_hint: int | None = None, budget: Budget = UNLIMITED) -> PlaneSubgraphResult:
    return _mis_result(D, "matching", "matching", upper_hint, budget)


def longest_plane_path(D: DrawnGraph, budget: Budget = UNLIMITED) -> PlaneSubgraphResult:
    """Longest plane simple path by memoised DFS.

    The state is (current end, edges still usable), where usable means not
    crossing any path edge and not touching an interior path vertex. The best
    continuation depends only on that state.
    """
    m = len(D.edges)
    if m == 0:
        return PlaneSubgraphResult("path", [], verified=True, optimal=True, vertices=[])
    full = (1 << m) - 1
    compat = [full & ~c for c in D.crossing_masks()]
    inc = incidence_masks(D)
    steps: dict[int, list[tuple[int, int]]] = {v: [] for v in D.vertices}
    for i, (u, v) in enumerate(D.edges):
        steps[u].append((i, v))
        steps[v].append((i, u))
    memo: dict[tuple[int, int], tuple[int, int]] = {}
    clock = budget.start()

    def best_from(t: int, mask: int) -> int:
        key = (t, mask)
        hit = memo.get(key)
        if hit is not None:
            return hit[0]
        clock.tick()
        best, choice = 0, -1
        leave = mask & ~inc[t]
        for i, w in steps[t]:
            if (mask >> i) & 1:
                val = 1 + best_from(w, leave & compat[i])
                if val > best:
                    best, choice = val, i
        memo[key] = (best, choice)
        return best

    best_len, best_start = 0, None
    optimal = True
    try:
        for s in sorted(D.vertices):
            val = best_from(s, full)
            if val > best_len:
                best_len, best_start = val, s
    except BudgetExceeded as exc:
        optimal = False
        reason = str(exc)
    walk: list[int] = []
    if best_start is not None:
        t, mask = best_start, full
        walk = [t]
        while True:
            val, i = memo[(t, mask)]
            if i < 0:
                break
            u, v = D.edges[i]
            w = v if u == t else u
            mask = mask & ~inc[t] & compat[i]
            t = w
            walk.append(t)
    edges = path_edges(walk)
    res = PlaneSubgraphResult("path", edges, verified=verify_plane(D, edges, "path"), optimal=optimal, vertices=walk, nodes=clock.nodes)
    if not optimal:
        res.meta["budget_exceeded"] = reason
    return res


def find_plane_cycle(D: DrawnGraph, max_len: int | None = None, budget: Budget = UNLIMITED) -> PlaneSubgraphResult | None:
    """Some plane cycle, or None after exhausting every simple cycle.

    Each cycle is rooted at its smallest vertex. Raises BudgetExceeded if the
    enumeration is cut short, since a partial search proves nothing.
    """
    m = len(D.edges)
    full = (1 << m) - 1
    compat = [full & ~c for c in D.crossing_masks()]
    inc = incidence_masks(D)
    steps: dict[int, list[tuple[int, int]]] = {v: [] for v in D.vertices}
    for i, (u, v) in enumerate(D.edges):
        steps[u].append((i, v))
        steps[v].append((i, u))
    clock = budget.start()
    verts = sorted(D.vertices)

    def dfs(s: int, t: int, mask: int, walk: list[int]) -> list[int] | None:
        clock.tick()
        for i, w in steps[t]:
            if not (mask >> i) & 1:
                continue
            if w == s:
                if len(walk) >= 3:
                    return walk + [s]
                continue
            if max_len is not None and len(walk) >= max_len:
                continue
            nm = mask & compat[i]
            if t != s:
                nm &= ~inc[t]
            else:
                nm &= ~(1 << i)
            found = dfs(s, w, nm, walk + [w])
            if found:
                return found
        return None

    for s in verts:
        mask = full
        for v in verts:
            if v < s:
                mask &= ~inc[v]
        found = dfs(s, s, mask, [s])
        if found:
            edges = path_edges(found)
            return PlaneSubgraphResult("cycle", edges, verified=verify_plane(D, edges, "cycle"), vertices=found, nodes=clock.nodes)
    return None


def find_plane_G0(D: DrawnGraph) -> list[Edge] | None:
    """A plane copy of K_{1,3} with every edge subdivided once, or None.

    Returned as [c-m1, c-m2, c-m3, m1-l1, m2-l2, m3-l3].
    """
    cross = D.crossing_masks()
    nbrs: dict[int, list[tuple[int, int]]] = {v: [] for v in D.vertices}
    for i, (u, v) in enumerate(D.edges):
        nbrs[u].append((i, v))
        nbrs[v].append((i, u))

    def leaves(mids, used, blocked, chosen):
        if len(chosen) == 6:
            return chosen
        mi, mid = mids[len(chosen) - 3]
        for j, leaf in nbrs[mid]:
            if leaf in used or (blocked >> j) & 1:
                continue
            got = leaves(mids, used | {leaf}, blocked | cross[j], chosen + [j])
            if got:
                return got
        return None

    for c in sorted(D.vertices):
        for trio in combinations(nbrs[c], 3):
            blocked = 0
            for i, _ in trio:
                blocked |= cross[i]
            if any((blocked >> i) & 1 for i, _ in trio):
                continue
            used = {c} | {w for _, w in trio}
            got = leaves(list(trio), used, blocked, [i for i, _ in trio])
            if got:
                return [D.edges[i] for i in got]
    return None


def contains_plane_G0(D: DrawnGraph) -> bool:
    return find_plane_G0(D) is not None
