import json

import pytest

from cubeplane.constructions import build_H
from cubeplane.document import DocumentError, DrawingDocument, dumps, from_json_obj, loads
from cubeplane.hypercube import HypercubeGraph
from cubeplane.nonconvex import figure7_drawing, random_rectilinear


@pytest.mark.parametrize(
    "doc",
    [
        DrawingDocument(build_H(4), {"generator": "hd"}),
        DrawingDocument(random_rectilinear(HypercubeGraph(3), 5), {"seed": 5}),
        DrawingDocument(figure7_drawing()),
    ],
)
def test_round_trip(doc):
    back = loads(dumps(doc))
    assert back == doc
    assert dumps(back) == dumps(doc)


def test_bare_abstract_form():
    doc = from_json_obj({"edges": [[0, 1], [2, 3]], "crossings": [[0, 1]]})
    assert doc.kind == "abstract" and doc.drawing.crosses((0, 1), (2, 3))


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        json.dumps({"format": "other"}),
        json.dumps({"format": "cubeplane-drawing", "version": 99}),
        json.dumps({"format": "cubeplane-drawing", "version": 1, "kind": "weird", "edges": []}),
        json.dumps({"format": "cubeplane-drawing", "version": 1, "kind": "convex", "edges": [[0, 1]]}),
        json.dumps({"format": "cubeplane-drawing", "version": 1, "kind": "convex", "d": 1,
                    "vertices": [{"id": 0, "label": "1"}, {"id": 1}], "order": [0, 1], "edges": [[0, 1]]}),
        json.dumps({"format": "cubeplane-drawing", "version": 1, "kind": "convex",
                    "vertices": [{"id": 0}, {"id": 1}], "order": [0, 2], "edges": [[0, 1]]}),
    ],
)
def test_malformed(text):
    with pytest.raises(DocumentError):
        loads(text)
