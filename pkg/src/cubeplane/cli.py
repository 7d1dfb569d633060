"""Command-line front end: ``cubeplane gen|stats|solve|verify|profiles|export-svg``."""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from . import constructions as C
from .convex import ConvexDrawing, count_crossings, irregular_pair, length_profile, length_rotation, norm_edge
from .document import DrawingDocument, dumps, loads
from .hypercube import MAX_DIMENSION, HypercubeGraph
from .nonconvex import random_rectilinear
from .perles import perles_path
from .profiles import BUDGET, DRAFT_Q4_PROFILES, REALIZABLE, check_conjectures, enumerate_profiles
from .solvers import Budget, longest_plane_path, max_plane_matching, max_plane_subgraph
from .svg import render_svg
from .verify import SUITES, checks_to_json, random_convex, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
GEN_KINDS = ("hd", "rd", "hparallel", "bipartite", "random-convex", "random-rect")


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read_doc(path: str) -> DrawingDocument:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def generate(kind: str, d: int, seed: int | None) -> DrawingDocument:
    meta: dict = {"generator": kind}
    if kind == "hd":
        D = C.build_H(d)
    elif kind == "rd":
        D = C.build_R(d)
    elif kind == "hparallel":
        D, pairs = C.build_H_parallel(d)
        meta["parallel_pairs"] = [[list(a), list(b)] for a, b in pairs.pairs()]
    elif kind == "bipartite":
        D = C.build_bipartite_split(d)
    elif kind == "random-convex":
        seed = 0 if seed is None else seed
        meta["seed"] = seed
        D = random_convex(d, seed)
    elif kind == "random-rect":
        seed = 0 if seed is None else seed
        meta["seed"] = seed
        D = random_rectilinear(HypercubeGraph(d), seed)
    else:
        raise UsageError(f"unknown kind {kind!r}")
    return DrawingDocument(D, meta)


def stats(doc: DrawingDocument) -> dict:
    D = doc.drawing
    rep: dict = {"kind": doc.kind, "d": D.d, "vertices": len(D.vertices), "edges": len(D.edges)}
    if isinstance(D, ConvexDrawing):
        rep["crossings"] = count_crossings(D)
        prof = length_profile(D)
        if prof is None:
            u, v = irregular_pair(D)
            rep["length_regular"] = False
            rep["irregular_pair"] = [D.label(u), D.label(v)]
        else:
            rep["length_regular"] = True
            rep["profile"] = list(prof)
            if D.d and D.d >= 3 and D.n >= 8:
                try:
                    hist = Counter(length_rotation(D, v) for v in D.order)
                except ValueError:
                    hist = None
                if hist is not None:
                    rep["rotation_histogram"] = {"".join("+" if s > 0 else "-" for s in k): c for k, c in sorted(hist.items())}
    else:
        pairs = D.crossing_pairs()
        rep["crossings"] = len(pairs)
        rep["crossing_pairs"] = [[list(D.edges[i]), list(D.edges[j])] for i, j in pairs]
        rep["length_regular"] = None
    return rep


def solve(doc: DrawingDocument, what: str, mode: str, time_limit: float | None):
    D = doc.drawing
    if mode == "exact":
        budget = Budget(time_limit=time_limit)
        fn = {"path": longest_plane_path, "matching": max_plane_matching, "subgraph": max_plane_subgraph}[what]
        return fn(D, budget=budget)
    if not isinstance(D, ConvexDrawing):
        raise UsageError(f"mode {mode} needs a convex drawing")
    if mode == "perles":
        if what != "path":
            raise UsageError("the peeling mode only produces paths")
        return perles_path(D)
    if mode == "construct":
        if D.d is None or D.d < 3 or D != C.build_H(D.d):
            raise UsageError("constructions apply to the H_d drawing only (gen hd D)")
        if what == "path":
            return C.construct_long_plane_path(D.d)
        matching, subgraph = C.construct_plane_matching(D.d)
        return matching if what == "matching" else subgraph
    raise UsageError(f"unknown mode {mode!r}")


def _text_table(rows: list[dict]) -> str:
    lines = []
    for c in rows:
        flag = "PASS" if c["passed"] else ("BUDGET" if c["budget_exceeded"] else "FAIL")
        lines.append(f"{flag:6} {c['suite']:13} {c['name']:48} {c['seconds']:7.2f}s  {c['detail']}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubeplane", description="Plane substructures in drawings of hypercubes.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, out=True):
        if out:
            sp.add_argument("--out", help="write to this file instead of stdout")
        sp.add_argument("--format", choices=("json", "text"), default="json")

    g = sub.add_parser("gen", help="generate a drawing document")
    g.add_argument("kind", choices=GEN_KINDS)
    g.add_argument("d", type=int)
    g.add_argument("--seed", type=int)
    common(g)

    s = sub.add_parser("stats", help="crossings, length profile and rotations of a drawing")
    s.add_argument("doc", help="document path or - for stdin")
    common(s)

    so = sub.add_parser("solve", help="find a plane path, matching or subgraph")
    so.add_argument("doc")
    so.add_argument("what", choices=("path", "matching", "subgraph"))
    so.add_argument("--mode", choices=("exact", "perles", "construct"), default="exact")
    so.add_argument("--time-limit", type=float)
    common(so)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", choices=("all",) + SUITES)
    v.add_argument("--dmax", type=int, default=5)
    v.add_argument("--time-limit", type=float, help="per exact-solver call, seconds")
    v.add_argument("--threads", type=int, default=1, help="worker processes for profile search")
    common(v)

    pr = sub.add_parser("profiles", help="enumerate realizable length profiles of Q_d (d <= 4)")
    pr.add_argument("d", type=int)
    pr.add_argument("--audit", action="store_true", help="also search filtered-out profiles")
    pr.add_argument("--threads", type=int, default=1)
    common(pr)

    e = sub.add_parser("export-svg", help="draw a convex or rectilinear document")
    e.add_argument("doc")
    e.add_argument("--out", required=True)
    e.add_argument("--highlight", help="result JSON (from solve) whose edges are highlighted")
    e.add_argument("--no-labels", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    if args.cmd == "gen":
        if not 1 <= args.d <= MAX_DIMENSION:
            raise UsageError(f"d must be in [1, {MAX_DIMENSION}]")
        doc = generate(args.kind, args.d, args.seed)
        if args.format == "text":
            D = doc.drawing
            text = " ".join(D.order_labels()) + "\n" if isinstance(D, ConvexDrawing) else dumps(doc)
        else:
            text = dumps(doc)
        _emit(text, args.out)
        return EXIT_OK

    if args.cmd == "stats":
        rep = stats(_read_doc(args.doc))
        if args.format == "text":
            text = "".join(f"{k}: {v}\n" for k, v in rep.items())
        else:
            text = json.dumps(rep, indent=1) + "\n"
        _emit(text, args.out)
        return EXIT_OK

    if args.cmd == "solve":
        res = solve(_read_doc(args.doc), args.what, args.mode, args.time_limit)
        if args.format == "text":
            text = f"{res.kind} of size {res.size} (verified={res.verified}, optimal={res.optimal})\n"
            text += " ".join(f"{u}-{v}" for u, v in res.edges) + "\n"
        else:
            text = json.dumps(res.to_dict(), indent=1) + "\n"
        _emit(text, args.out)
        if not res.verified:
            return EXIT_FAIL
        if res.meta.get("budget_exceeded"):
            return EXIT_BUDGET
        return EXIT_OK

    if args.cmd == "verify":
        if args.dmax < 2:
            raise UsageError("--dmax must be at least 2")
        budget = Budget(time_limit=args.time_limit)
        suites = SUITES if args.suite == "all" else (args.suite,)
        checks = []
        for name in suites:
            checks += run_suite(name, args.dmax, budget, args.threads)
        rows = checks_to_json(checks)
        passed = all(c.passed for c in checks)
        if args.format == "text":
            text = _text_table(rows) + ("all checks passed\n" if passed else "some checks FAILED\n")
        else:
            text = json.dumps({"passed": passed, "checks": rows}, indent=1) + "\n"
        _emit(text, args.out)
        if passed:
            return EXIT_OK
        if any(c.budget_exceeded for c in checks) and all(c.passed or c.budget_exceeded for c in checks):
            return EXIT_BUDGET
        return EXIT_FAIL

    if args.cmd == "profiles":
        if not 2 <= args.d <= 4:
            raise UsageError("profile enumeration supports 2 <= d <= 4")
        res = enumerate_profiles(args.d, audit=args.audit, workers=args.threads)
        rep = check_conjectures(res, args.d)
        if args.format == "text":
            lines = [f"{'profile':16} {'status':16} witness / reason"]
            for c in res:
                extra = " ".join(c.witness.order_labels()) if c.witness is not None else (c.reason or "")
                tag = "" if args.d != 4 or c.status != REALIZABLE or c.profile in DRAFT_Q4_PROFILES else " [new]"
                lines.append(f"{','.join(map(str, c.profile)):16} {c.status + tag:16} {extra}")
            lines += [f"{k}: {v}" for k, v in rep.to_dict().items()]
            text = "\n".join(lines) + "\n"
        else:
            text = json.dumps({"profiles": [c.to_dict(args.d) for c in res], "conjectures": rep.to_dict()}, indent=1) + "\n"
        _emit(text, args.out)
        return EXIT_BUDGET if any(c.status == BUDGET for c in res) else EXIT_OK

    if args.cmd == "export-svg":
        doc = _read_doc(args.doc)
        if doc.kind == "abstract":
            raise UsageError("abstract drawings have no geometry to draw")
        edges = []
        if args.highlight:
            try:
                edges = [tuple(e) for e in json.loads(Path(args.highlight).read_text())["edges"]]
            except (OSError, KeyError, json.JSONDecodeError) as exc:
                raise UsageError(f"cannot read highlight edges: {exc}") from exc
            unknown = [e for e in edges if norm_edge(*e) not in doc.drawing.edge_index]
            if unknown:
                raise UsageError(f"highlighted edges not in the drawing: {unknown}")
        Path(args.out).write_text(render_svg(doc.drawing, edges, labels=not args.no_labels))
        return EXIT_OK
    raise UsageError(f"unknown command {args.cmd}")


if __name__ == "__main__":
    sys.exit(main())
