"""Which length profiles do length-regular convex drawings of Q_d realize?

Profiles here are ascending tuples, e.g. ``(4, 4, 6, 7)`` for H_4.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Sequence

from .convex import ConvexDrawing, length_profile
from .hypercube import HypercubeGraph

# the hand-made list of Q_4 profiles we aim to reproduce
DRAFT_Q4_PROFILES: tuple[tuple[int, ...], ...] = tuple(
    tuple(int(x) for x in s.split(","))
    for s in """
    1,2,2,6 1,2,3,5 1,2,3,7 1,2,4,4 1,2,4,6 1,2,4,7 1,2,4,8 1,2,5,7 1,2,6,6 1,3,5,6
    1,3,6,7 1,4,4,6 1,4,6,8 1,5,6,7 2,2,5,6 2,3,4,4 2,3,4,5 2,3,4,8 2,3,6,7 2,4,4,5
    2,4,4,7 2,4,5,8 2,4,6,7 2,4,7,8 2,5,6,6 3,4,4,6 3,4,6,8 4,4,5,6 4,4,6,7 4,5,6,8
    4,6,7,8
    """.split()
)

DEFAULT_NODE_BUDGET = 10**9

REALIZABLE = "realizable"
REFUTED = "refuted"
FILTERED = "filtered"
BUDGET = "budget-exceeded"


def necessary_filters(profile: Sequence[int], d: int) -> str | None:
    """Reason the profile cannot be realized, or None if it passes.

    1. Some length must be odd, otherwise only same-parity slots are joined
       and the drawing is disconnected.
    2. A length l occurring twice at every vertex joins each slot p to p +- l,
       so p and p + 2jl (mod n) have equal colour: no length congruent to
       +-2jl may occur.
    3. An odd length occurring twice walks through every slot with
       alternating colours (n is a power of two), so no even length may occur.
    """
    n = 1 << d
    half = n // 2
    prof = tuple(profile)
    if len(prof) != d or any(not 1 <= x <= half for x in prof):
        raise ValueError(f"profile must have {d} entries in [1, {half}]")
    if all(x % 2 == 0 for x in prof):
        return "no odd length"
    counts = Counter(prof)
    present = set(prof)
    for length, c in sorted(counts.items()):
        if c < 2:
            continue
        for j in range(1, n):
            r = (2 * j * length) % n
            folded = min(r, n - r)
            if folded in present:
                return f"length {length} appears twice and its even multiple {folded} appears"
            if r == 0:
                break
    for length, c in sorted(counts.items()):
        if c >= 2 and length % 2 == 1 and any(x % 2 == 0 for x in prof):
            return f"odd length {length} appears twice and an even length appears"
    return None


@dataclass
class ProfileCandidate:
    profile: tuple[int, ...]
    status: str
    reason: str | None = None
    witness: ConvexDrawing | None = None
    nodes: int = 0
    audit_status: str | None = None

    def to_dict(self, d: int) -> dict:
        out: dict = {"profile": list(self.profile), "status": self.status, "search_nodes": self.nodes}
        if self.reason:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness_order"] = self.witness.order_labels()
        if self.audit_status is not None:
            out["audit_status"] = self.audit_status
        if d == 4:
            out["in_draft_list"] = self.profile in DRAFT_Q4_PROFILES
        return out


class SearchBudgetExceeded(Exception):
    def __init__(self, nodes: int):
        super().__init__(f"search budget exceeded after {nodes} nodes")
        self.nodes = nodes


def _bfs_order(d: int) -> list[int]:
    order, seen = [0], {0}
    for v in order:
        for i in range(d):
            w = v ^ (1 << i)
            if w not in seen:
                seen.add(w)
                order.append(w)
    return order


def realize_profile(
    profile: Sequence[int], d: int, node_budget: int = DEFAULT_NODE_BUDGET, vertex_order: Sequence[int] | None = None
) -> tuple[ConvexDrawing | None, int]:
    """Backtracking placement of Q_d on 2**d slots with every vertex seeing ``profile``.

    Returns (witness or None, search nodes). None means the search was
    exhausted. Raises SearchBudgetExceeded when ``node_budget`` runs out.

    Vertex 0 sits at slot 0; coordinate permutations let the neighbours
    1, 2, 4, ... take increasing slots, and reflection lets the neighbour slot
    set be no larger (sorted, lexicographically) than its mirror image.
    """
    if d > 4:
        raise ValueError("profile realization is limited to d <= 4")
    n = 1 << d
    prof = tuple(sorted(profile))
    if len(prof) != d:
        raise ValueError(f"profile must have {d} entries")
    lengths = sorted(set(prof))
    lidx = {le: i for i, le in enumerate(lengths)}
    want = [prof.count(le) for le in lengths]
    order = list(vertex_order) if vertex_order is not None else _bfs_order(d)
    if order[0] != 0 or sorted(order) != list(range(n)):
        raise ValueError("vertex order must start at 0 and cover all vertices")
    nbrs = [[v ^ (1 << i) for i in range(d)] for v in range(n)]
    unit = [1 << i for i in range(d)]
    slot = [-1] * n
    owner = [-1] * n
    resid = [list(want) for _ in range(n)]
    nodes = 0

    def dist(a: int, b: int) -> int:
        r = (a - b) % n
        return min(r, n - r)

    def feasible(q: int) -> bool:
        # every outstanding length at q needs enough free slots at that distance
        s = slot[q]
        for li, c in enumerate(resid[q]):
            if c:
                le = lengths[li]
                free = (owner[(s + le) % n] < 0) + (le * 2 != n and owner[(s - le) % n] < 0)
                if free < c:
                    return False
        return True

    def canonical_so_far() -> bool:
        placed = [slot[u] for u in unit if slot[u] >= 0]
        if any(a >= b for a, b in zip(placed, placed[1:])):
            return False
        if len(placed) == d:
            mirror = sorted((n - s) % n for s in placed)
            return placed <= mirror
        return True

    def place(k: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetExceeded(nodes)
        if k == n:
            return True
        v = order[k]
        placed_nb = [q for q in nbrs[v] if slot[q] >= 0]
        anchor = placed_nb[0]
        cands = set()
        for li, c in enumerate(resid[anchor]):
            if c:
                le = lengths[li]
                for s in ((slot[anchor] + le) % n, (slot[anchor] - le) % n):
                    if owner[s] < 0:
                        cands.add(s)
        for s in sorted(cands):
            taken = []
            ok = True
            for q in placed_nb:
                li = lidx.get(dist(s, slot[q]))
                if li is None or not resid[q][li] or not resid[v][li]:
                    ok = False
                    break
                resid[q][li] -= 1
                resid[v][li] -= 1
                taken.append((q, li))
            if ok:
                slot[v], owner[s] = s, v
                if (
                    canonical_so_far()
                    and all(feasible(q) for q in placed_nb)
                    and feasible(v)
                    and place(k + 1)
                ):
                    return True
                slot[v], owner[s] = -1, -1
            for q, li in taken:
                resid[q][li] += 1
                resid[v][li] += 1
        return False

    slot[0], owner[0] = 0, 0
    if not place(1):
        return None, nodes
    order_by_slot = [owner[s] for s in range(n)]
    D = ConvexDrawing(order_by_slot, HypercubeGraph(d).edges, d)
    got = length_profile(D)
    if got is None or tuple(sorted(got)) != prof:
        raise AssertionError(f"witness for {prof} has profile {got}")
    return D, nodes


def _search(args) -> ProfileCandidate:
    prof, d, budget, vertex_order = args
    try:
        w, nodes = realize_profile(prof, d, budget, vertex_order)
    except SearchBudgetExceeded as exc:
        return ProfileCandidate(prof, BUDGET, nodes=exc.nodes)
    if w is None:
        return ProfileCandidate(prof, REFUTED, nodes=nodes)
    return ProfileCandidate(prof, REALIZABLE, witness=w, nodes=nodes)


def all_profiles(d: int) -> list[tuple[int, ...]]:
    return list(combinations_with_replacement(range(1, (1 << (d - 1)) + 1), d))


def enumerate_profiles(
    d: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    audit: bool = False,
    workers: int = 1,
    vertex_order: Sequence[int] | None = None,
) -> list[ProfileCandidate]:
    """Every ascending profile, filtered then searched.

    With ``audit`` the search also runs on filtered-out profiles and stores
    its verdict in ``audit_status``; a realizable verdict there means a
    filter is unsound.
    """
    if d > 4:
        raise ValueError("profile enumeration is limited to d <= 4")
    out: list[ProfileCandidate] = []
    jobs = []
    for prof in all_profiles(d):
        reason = necessary_filters(prof, d)
        if reason is None or audit:
            jobs.append((prof, d, node_budget, vertex_order))
        if reason is not None:
            out.append(ProfileCandidate(prof, FILTERED, reason=reason))
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            searched = list(ex.map(_search, jobs))
    else:
        searched = [_search(j) for j in jobs]
    by_prof = {c.profile: c for c in out}
    for res in searched:
        if res.profile in by_prof:
            by_prof[res.profile].audit_status = res.status
            by_prof[res.profile].nodes = res.nodes
        else:
            out.append(res)
    out.sort(key=lambda c: c.profile)
    return out


def realizable(results: Sequence[ProfileCandidate]) -> list[tuple[int, ...]]:
    return [c.profile for c in results if c.status == REALIZABLE]


@dataclass
class ConjectureReport:
    d: int
    bound_violations: list[tuple[int, ...]] = field(default_factory=list)
    all_odd: list[tuple[int, ...]] = field(default_factory=list)
    repeated_odd: list[tuple[int, ...]] = field(default_factory=list)
    new_profiles: list[tuple[int, ...]] = field(default_factory=list)
    missing_from_search: list[tuple[int, ...]] = field(default_factory=list)

    def to_dict(self) -> dict:
        def fmt(xs):
            return [list(x) for x in xs]

        return {
            "d": self.d,
            "bound l_i <= 2^(d-1) - 2^(d-i-1)": fmt(self.bound_violations) or "consistent",
            "some even length exists": fmt(self.all_odd) or "consistent",
            "no odd length twice": fmt(self.repeated_odd) or "consistent",
            "realizable but not in hand list": fmt(self.new_profiles),
            "hand list but not realized": fmt(self.missing_from_search),
        }


def check_conjectures(results: Sequence[ProfileCandidate], d: int) -> ConjectureReport:
    rep = ConjectureReport(d)
    half = 1 << (d - 1)
    found = realizable(results)
    for prof in found:
        asc = sorted(prof)
        # i is 1-based; only indices with d - (i + 1) >= 0 are meaningful
        if any(asc[i - 1] > half - (1 << (d - i - 1)) for i in range(1, d) if d - i - 1 >= 0):
            rep.bound_violations.append(prof)
        if all(x % 2 for x in prof):
            rep.all_odd.append(prof)
        if any(c >= 2 and le % 2 for le, c in Counter(prof).items()):
            rep.repeated_odd.append(prof)
    if d == 4:
        rep.new_profiles = [p for p in found if p not in DRAFT_Q4_PROFILES]
        rep.missing_from_search = [p for p in DRAFT_Q4_PROFILES if p not in found]
    return rep
