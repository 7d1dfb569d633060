"""Version-tagged JSON documents for the three drawing kinds."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .convex import ConvexDrawing
from .hypercube import label, parse_label
from .nonconvex import AbstractSimpleDrawing, RectilinearDrawing

FORMAT = "cubeplane-drawing"
VERSION = 1
KINDS = ("convex", "rectilinear", "abstract")

Drawing = ConvexDrawing | RectilinearDrawing | AbstractSimpleDrawing


class DocumentError(ValueError):
    pass


@dataclass
class DrawingDocument:
    drawing: Drawing
    meta: dict[str, Any] = field(default_factory=dict)

    @property
    def kind(self) -> str:
        if isinstance(self.drawing, ConvexDrawing):
            return "convex"
        if isinstance(self.drawing, RectilinearDrawing):
            return "rectilinear"
        return "abstract"

    @property
    def d(self) -> int | None:
        return self.drawing.d


def _vertex_entry(v: int, d: int | None) -> dict:
    out: dict[str, Any] = {"id": v}
    if d:
        out["label"] = label(v, d)
    return out


def to_json_obj(doc: DrawingDocument) -> dict:
    D = doc.drawing
    out: dict[str, Any] = {"format": FORMAT, "version": VERSION, "kind": doc.kind}
    if D.d is not None:
        out["d"] = D.d
    if isinstance(D, ConvexDrawing):
        out["vertices"] = [_vertex_entry(v, D.d) for v in sorted(D.order)]
        out["order"] = list(D.order)
    elif isinstance(D, RectilinearDrawing):
        out["vertices"] = [dict(_vertex_entry(v, D.d), x=D.coords[v][0], y=D.coords[v][1]) for v in D.vertices]
    else:
        out["vertices"] = [_vertex_entry(v, D.d) for v in D.vertices]
        if D.names:
            for entry in out["vertices"]:
                if entry["id"] in D.names:
                    entry["name"] = D.names[entry["id"]]
    out["edges"] = [list(e) for e in D.edges]
    if isinstance(D, AbstractSimpleDrawing):
        out["crossings"] = [list(p) for p in sorted(D.crossings)]
    if doc.meta:
        out["meta"] = doc.meta
    return out


def dumps(doc: DrawingDocument) -> str:
    return json.dumps(to_json_obj(doc), indent=1, sort_keys=True) + "\n"


def _require(obj: dict, key: str):
    if key not in obj:
        raise DocumentError(f"document is missing {key!r}")
    return obj[key]


def from_json_obj(obj: dict) -> DrawingDocument:
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    # bare abstract form: just edges and crossing index pairs
    if "format" not in obj and "edges" in obj and "crossings" in obj:
        obj = dict(obj, format=FORMAT, version=VERSION, kind="abstract")
    if obj.get("format") != FORMAT:
        raise DocumentError(f"not a {FORMAT} document")
    if obj.get("version") != VERSION:
        raise DocumentError(f"unsupported version {obj.get('version')!r}")
    kind = _require(obj, "kind")
    if kind not in KINDS:
        raise DocumentError(f"unknown kind {kind!r}")
    d = obj.get("d")
    try:
        edges = [tuple(int(x) for x in e) for e in _require(obj, "edges")]
        verts = obj.get("vertices")
        if verts is None:
            ids = sorted({v for e in edges for v in e})
            verts = [{"id": v} for v in ids]
        for entry in verts:
            if d and "label" in entry and parse_label(entry["label"]) != entry["id"]:
                raise DocumentError(f"label {entry['label']!r} does not match id {entry['id']}")
            if d and not 0 <= entry["id"] < (1 << d):
                raise DocumentError(f"vertex id {entry['id']} out of range for d={d}")
        if kind == "convex":
            drawing: Drawing = ConvexDrawing(_require(obj, "order"), edges, d)
            if sorted(drawing.order) != sorted(e["id"] for e in verts):
                raise DocumentError("order and vertex list disagree")
        elif kind == "rectilinear":
            coords = {int(e["id"]): (int(_require(e, "x")), int(_require(e, "y"))) for e in verts}
            drawing = RectilinearDrawing(coords, edges, d)
        else:
            crossings = frozenset(tuple(int(x) for x in p) for p in _require(obj, "crossings"))
            names = {int(e["id"]): e["name"] for e in verts if "name" in e}
            drawing = AbstractSimpleDrawing(tuple(int(e["id"]) for e in verts), tuple(sorted(edges)), crossings, d, names)
    except DocumentError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed {kind} document: {exc}") from exc
    return DrawingDocument(drawing, dict(obj.get("meta", {})))


def loads(text: str) -> DrawingDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return from_json_obj(obj)
