import json

import pytest

from cubeplane.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def h(tmp_path, capsys):
    def make(kind, d, *extra):
        path = tmp_path / f"{kind}{d}.json"
        assert main(["gen", kind, str(d), "--out", str(path), *extra]) == 0
        return str(path)

    return make


def test_gen_hd4_text(capsys):
    code, out, _ = _run(capsys, "gen", "hd", "4", "--format", "text")
    assert code == 0
    assert out.split() == "0000 1101 0110 1010 0001 1111 0100 1000 0011 1110 0101 1001 0010 1100 0111 1011".split()


def test_gen_all_kinds(h):
    for kind in ("hd", "rd", "hparallel", "bipartite", "random-convex", "random-rect"):
        doc = json.loads(open(h(kind, 3)).read())
        assert len(doc["vertices"]) == 8 and len(doc["edges"]) == 12


def test_random_rect_deterministic(capsys):
    a = _run(capsys, "gen", "random-rect", "3", "--seed", "7")[1]
    b = _run(capsys, "gen", "random-rect", "3", "--seed", "7")[1]
    assert a == b and json.loads(a)["meta"]["seed"] == 7


def test_stats(h, capsys):
    code, out, _ = _run(capsys, "stats", h("rd", 3))
    rep = json.loads(out)
    assert rep["profile"] == [4, 3, 2] and rep["crossings"] == 28
    rep = json.loads(_run(capsys, "stats", h("rd", 4))[1])
    assert rep["crossings"] == 284
    rep = json.loads(_run(capsys, "stats", h("hd", 5))[1])
    assert set(rep["rotation_histogram"].values()) == {4} and len(rep["rotation_histogram"]) == 8
    rep = json.loads(_run(capsys, "stats", h("random-convex", 4, "--seed", "2"))[1])
    assert rep["length_regular"] is False and len(rep["irregular_pair"]) == 2


def test_stats_abstract(tmp_path, capsys):
    from cubeplane.document import DrawingDocument, dumps
    from cubeplane.nonconvex import figure7_drawing

    p = tmp_path / "f7.json"
    p.write_text(dumps(DrawingDocument(figure7_drawing())))
    rep = json.loads(_run(capsys, "stats", str(p))[1])
    assert rep["crossings"] == 22 and "profile" not in rep


def test_solve_modes(h, capsys):
    code, out, _ = _run(capsys, "solve", h("hd", 4), "path")
    assert code == 0 and json.loads(out)["size"] == 5
    code, out, _ = _run(capsys, "solve", h("hd", 6), "matching", "--mode", "construct")
    assert code == 0 and json.loads(out)["size"] == 8
    code, out, _ = _run(capsys, "solve", h("random-convex", 5, "--seed", "11"), "path", "--mode", "perles")
    assert code == 0 and json.loads(out)["size"] >= 5


def test_solve_budget_exit_code(h, capsys):
    code, out, _ = _run(capsys, "solve", h("hd", 7), "path", "--time-limit", "0.001")
    assert code == 3 and json.loads(out)["optimal"] is False


def test_usage_errors(h, capsys):
    assert _run(capsys, "solve", h("rd", 4), "path", "--mode", "construct")[0] == 2
    assert _run(capsys, "solve", h("hd", 4), "matching", "--mode", "perles")[0] == 2
    assert _run(capsys, "gen", "hd", "0")[0] == 2
    assert _run(capsys, "stats", "/nonexistent.json")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["gen", "nope", "3"])
    assert exc.value.code == 2


def test_verify_suites(capsys):
    code, out, _ = _run(capsys, "verify", "crossings", "--dmax", "6")
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    code, out, _ = _run(capsys, "verify", "bounds", "--dmax", "4", "--format", "text")
    assert code == 0 and "all checks passed" in out


def test_verify_failure_exit_code(monkeypatch, capsys):
    import cubeplane.cli as cli
    from cubeplane.verify import Check

    monkeypatch.setattr(cli, "run_suite", lambda *a: [Check("x", "broken", False)])
    assert _run(capsys, "verify", "crossings")[0] == 1
    monkeypatch.setattr(cli, "run_suite", lambda *a: [Check("x", "slow", False, budget_exceeded=True)])
    assert _run(capsys, "verify", "crossings")[0] == 3


def test_export_svg(h, tmp_path, capsys):
    doc = h("hd", 5)
    res = tmp_path / "path.json"
    assert main(["solve", doc, "path", "--mode", "construct", "--out", str(res)]) == 0
    svg = tmp_path / "h5.svg"
    assert main(["export-svg", doc, "--out", str(svg), "--highlight", str(res)]) == 0
    text = svg.read_text()
    assert text.startswith("<svg") and text.count('stroke="#d62728"') == 7
    bare = tmp_path / "bare.svg"
    assert main(["export-svg", h("random-rect", 3), "--out", str(bare)]) == 0
    assert 'stroke="#d62728"' not in bare.read_text()


def test_export_svg_rejects_abstract(tmp_path, capsys):
    p = tmp_path / "a.json"
    p.write_text(json.dumps({"edges": [[0, 1], [2, 3]], "crossings": []}))
    assert _run(capsys, "export-svg", str(p), "--out", str(tmp_path / "x.svg"))[0] == 2


def test_profiles_command(capsys):
    code, out, _ = _run(capsys, "profiles", "4")
    rep = json.loads(out)
    assert code == 0
    realized = [tuple(p["profile"]) for p in rep["profiles"] if p["status"] == "realizable"]
    assert (4, 4, 6, 7) in realized and len(realized) == 44
    assert rep["conjectures"]["no odd length twice"] == "consistent"
    code, out, _ = _run(capsys, "profiles", "3", "--audit", "--format", "text")
    assert code == 0 and "1,1,3" in out
    assert _run(capsys, "profiles", "5")[0] == 2
