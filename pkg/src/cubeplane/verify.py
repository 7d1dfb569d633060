"""Named verification suites; each returns a list of pass/fail checks."""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable

from . import constructions as C
from .convex import (
    ConvexDrawing,
    count_crossings,
    crossing_formula,
    length_profile,
    weakly_isomorphic_up_to_automorphism,
)
from .document import DrawingDocument, dumps
from .hypercube import HypercubeGraph, parse_label
from .nonconvex import figure7_drawing, random_rectilinear, validate_figure7
from .perles import perles_path
from .profiles import (
    DRAFT_Q4_PROFILES,
    FILTERED,
    REALIZABLE,
    SearchBudgetExceeded,
    enumerate_profiles,
    realizable,
)
from .solvers import (
    Budget,
    BudgetExceeded,
    contains_plane_G0,
    find_plane_cycle,
    longest_plane_path,
    max_plane_matching,
    max_plane_subgraph,
)

# clockwise label sequences read off the published drawings
REFERENCE_H3 = "000 110 001 100 011 101 010 111".split()
REFERENCE_H4 = "0000 1101 0110 1010 0001 1111 0100 1000 0011 1110 0101 1001 0010 1100 0111 1011".split()
REFERENCE_R4 = "0000 1110 0111 1011 0010 1101 0100 1000 0001 1111 0110 1010 0011 1100 0101 1001".split()

SUITES = ("constructions", "crossings", "bounds", "profiles", "nonconvex")
DMAX_CEILING = {"constructions": 10, "crossings": 7, "bounds": 6, "profiles": 4, "nonconvex": 3}


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    budget_exceeded: bool = False


def _run(suite: str, name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
        return Check(suite, name, bool(ok), detail, time.perf_counter() - t0)
    except (BudgetExceeded, SearchBudgetExceeded) as exc:
        return Check(suite, name, False, f"budget exceeded: {exc}", time.perf_counter() - t0, True)


def random_convex(d: int, seed: int) -> ConvexDrawing:
    order = list(range(1 << d))
    random.Random(seed).shuffle(order)
    return ConvexDrawing(order, HypercubeGraph(d).edges, d)


def _h_profile(d: int) -> tuple[int, ...]:
    half = 1 << (d - 1)
    return tuple(half - (1 << i) for i in range(d - 1)) + (half - (1 << (d - 2)),)


def _r_profile(d: int) -> tuple[int, ...]:
    half = 1 << (d - 1)
    return (half,) + tuple(half - (1 << (i - 2)) for i in range(2, d + 1))


def suite_constructions(dmax: int, budget: Budget) -> list[Check]:
    s = "constructions"
    out = []

    def drawings_match():
        ok3 = C.build_H(3).order_labels() == REFERENCE_H3
        ok4 = C.build_H(4).order_labels() == REFERENCE_H4
        ref_r4 = ConvexDrawing([parse_label(x) for x in REFERENCE_R4], HypercubeGraph(4).edges, 4)
        g = weakly_isomorphic_up_to_automorphism(C.build_R(4), ref_r4, 4)
        return ok3 and ok4 and g is not None, f"H_3 {ok3}, H_4 {ok4}, R_4 automorphism {g}"

    out.append(_run(s, "reference circular orders", drawings_match))

    def profiles():
        bad = []
        for d in range(2, dmax + 1):
            if length_profile(C.build_H(d)) != _h_profile(d):
                bad.append(f"H_{d}")
            if length_profile(C.build_R(d)) != _r_profile(d):
                bad.append(f"R_{d}")
        return not bad, f"d=2..{dmax}" + (f" mismatches {bad}" if bad else "")

    out.append(_run(s, "length profiles of H_d and R_d", profiles))

    def rotations():
        bad = [(d, k) for d in range(3, min(dmax, 7) + 1) for k, v in C.rotation_lemma_checks(d).items() if not v]
        return not bad, f"d=3..{min(dmax, 7)}" + (f" failures {bad}" if bad else "")

    if dmax >= 3:
        out.append(_run(s, "length-rotation lemmas in H_d", rotations))

    def matchings():
        bad = []
        for d in range(3, dmax + 1):
            m, g = C.construct_plane_matching(d)
            if not (m.verified and g.verified and m.size == 2 * d - 4 and g.size == 2 * d - 2):
                bad.append(d)
        return not bad, f"d=3..{dmax}" + (f" failures {bad}" if bad else "")

    def paths():
        bad = []
        for d in range(4, dmax + 1):
            p = C.construct_long_plane_path(d)
            if not (p.verified and p.size == 2 * d - 3):
                bad.append(d)
        return not bad, f"d=4..{dmax}" + (f" failures {bad}" if bad else "")

    def claims():
        xs = [C.claim_x(k) for k in range(1, 21)]
        ok = all(C.claim_x_holds(x, k) for k, x in enumerate(xs, 1)) and xs[:4] == [0, 2, 2, 10]
        return ok, f"x_1..x_4 = {xs[:4]}"

    if dmax >= 3:
        out.append(_run(s, "plane matching and subgraph constructions", matchings))
    if dmax >= 4:
        out.append(_run(s, "long plane path construction", paths))
    out.append(_run(s, "bit-condition numbers", claims))
    return out


def suite_crossings(dmax: int, budget: Budget) -> list[Check]:
    s = "crossings"

    def formula():
        bad = []
        for d in range(2, dmax + 1):
            for name, D in (("H", C.build_H(d)), ("R", C.build_R(d))):
                if count_crossings(D) != crossing_formula(length_profile(D), D.n):
                    bad.append(f"{name}_{d}")
        return not bad, f"d=2..{dmax}" + (f" mismatches {bad}" if bad else "")

    def closed_form():
        got = {d: count_crossings(C.build_R(d)) for d in range(2, dmax + 1)}
        ok = all(got[d] == C.crmax_lower_bound(d) for d in got)
        return ok, f"R_d crossings {got}"

    return [_run(s, "length-regular crossing formula", formula), _run(s, "R_d closed form", closed_form)]


def suite_bounds(dmax: int, budget: Budget, random_orders: int = 300) -> list[Check]:
    s = "bounds"
    out = []

    def exact(d):
        def fn():
            D = C.build_H(d)
            sub = max_plane_subgraph(D, budget=budget)
            if d == 3:
                return sub.size == 4 and sub.optimal, f"subgraph {sub.size}"
            path = longest_plane_path(D, budget=budget)
            mat = max_plane_matching(D, budget=budget)
            got = (sub.size, path.size, mat.size)
            proven = sub.optimal and path.optimal and mat.optimal
            if not proven:
                raise BudgetExceeded(f"H_{d} not proven optimal")
            return got == (2 * d - 2, 2 * d - 3, 2 * d - 4), f"(subgraph, path, matching) = {got}"

        return fn

    for d in range(3, dmax + 1):
        out.append(_run(s, f"exact bounds in H_{d}", exact(d)))

    def perles():
        bad = []
        for d in range(3, dmax + 1):
            need = d if d % 2 else d - 1
            drawings = [C.build_H(d), C.build_R(d)] + [random_convex(d, seed) for seed in range(random_orders)]
            for D in drawings:
                p = perles_path(D)
                if not (p.verified and p.size >= need):
                    bad.append((d, D.order))
        return not bad, f"d=3..{dmax}, {random_orders} random orders each" + (f", failures {bad[:3]}" if bad else "")

    out.append(_run(s, "peeling path guarantee", perles))

    def g0():
        hits = [d for d in range(2, min(dmax, 7) + 1) if contains_plane_G0(C.build_H(d))]
        return not hits, f"d=2..{min(dmax, 7)}" + (f" plane G_0 in {hits}" if hits else "")

    def cycles():
        hits = [d for d in range(3, min(dmax, 4) + 1) if find_plane_cycle(C.build_bipartite_split(d), budget=budget)]
        return not hits, f"d=3..{min(dmax, 4)}" + (f" plane cycle in {hits}" if hits else "")

    out.append(_run(s, "no plane subdivided claw in H_d", g0))
    out.append(_run(s, "no plane cycle in the bipartite split drawing", cycles))
    return out


def suite_profiles(dmax: int, budget: Budget, workers: int = 1) -> list[Check]:
    s = "profiles"
    out = []

    def audit():
        res = enumerate_profiles(3, audit=True, workers=workers)
        unsound = [c.profile for c in res if c.status == FILTERED and c.audit_status == REALIZABLE]
        return not unsound, f"{len(realizable(res))} realizable at d=3" + (f"; filters reject {unsound}" if unsound else "")

    out.append(_run(s, "filters sound at d=3", audit))
    if dmax >= 4:

        def q4():
            res = enumerate_profiles(4, workers=workers)
            found = realizable(res)
            missing = [p for p in DRAFT_Q4_PROFILES if p not in found]
            extra = [p for p in found if p not in DRAFT_Q4_PROFILES]
            witnesses = {c.profile: c.witness for c in res if c.witness is not None}
            own = all(length_profile(witnesses[p]) == tuple(sorted(p, reverse=True)) for p in ((4, 4, 6, 7), (4, 6, 7, 8)))
            return not missing and own, f"{len(found)} realizable, missing {missing}, extra {len(extra)}"

        out.append(_run(s, "hand-listed Q_4 profiles realizable", q4))
    return out


def suite_nonconvex(dmax: int, budget: Budget, samples: int = 1000, archive: Path | None = None) -> list[Check]:
    s = "nonconvex"
    g = HypercubeGraph(3)

    def rect():
        bad = []
        for seed in range(samples):
            D = random_rectilinear(g, seed)
            p = longest_plane_path(D, budget=budget)
            if p.size < 4:
                bad.append(seed)
                if archive is not None:
                    archive.mkdir(parents=True, exist_ok=True)
                    (archive / f"counterexample_seed{seed}.json").write_text(dumps(DrawingDocument(D, {"seed": seed})))
        return not bad, f"{samples} seeds" + (f", short paths at {bad}" if bad else "")

    def fig7():
        rep = validate_figure7(figure7_drawing())
        return rep.ok, json.dumps(rep.checks) if rep.ok else "; ".join(rep.failures)

    return [_run(s, "random rectilinear Q_3 has plane 4-path", rect), _run(s, "Q_3 drawing without plane 4-path", fig7)]


def run_suite(name: str, dmax: int, budget: Budget, workers: int = 1) -> list[Check]:
    d = min(dmax, DMAX_CEILING.get(name, dmax))
    if name == "constructions":
        return suite_constructions(d, budget)
    if name == "crossings":
        return suite_crossings(d, budget)
    if name == "bounds":
        return suite_bounds(d, budget)
    if name == "profiles":
        return suite_profiles(d, budget, workers)
    if name == "nonconvex":
        return suite_nonconvex(d, budget)
    raise ValueError(f"unknown suite {name!r}")


def checks_to_json(checks: list[Check]) -> list[dict]:
    return [asdict(c) for c in checks]
