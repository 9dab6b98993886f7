import json
from pathlib import Path

import pytest

from quantcat import io
from quantcat.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *args):
    code = main([str(a) for a in args])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hausdorff_line(capsys):
    code, out, _ = run(capsys, "hausdorff", "--space", DATA / "line.json", "--source", "0,1", "--target", "4")
    assert code == 0
    assert [line.split()[-1] for line in out.splitlines()] == ["4/1", "3/1", "4/1"]
    code, out, _ = run(capsys, "--json", "hausdorff", "--space", DATA / "line.json", "--source", "0,1",
                       "--target", "4")
    assert json.loads(out) == {"source_to_target": "4/1", "target_to_source": "3/1", "symmetrized": "4/1"}


def test_hausdorff_rejects_unknown_points(capsys):
    code, _, err = run(capsys, "hausdorff", "--space", DATA / "line.json", "--source", "9", "--target", "4")
    assert code == 2 and "unknown point" in err


def test_validate(capsys):
    assert run(capsys, "validate", DATA / "line.json")[0] == 0
    code, _, err = run(capsys, "validate", DATA / "triangle_violation.json")
    assert code == 2 and "triangle" in err
    assert run(capsys, "validate", DATA / "chain2.json")[0] == 0
    assert run(capsys, "validate", DATA / "missing.json")[0] == 2


def test_hcat_round_trip(capsys, tmp_path):
    out = tmp_path / "h.json"
    assert run(capsys, "hcat", "--space", DATA / "chain2.json", "--out", out)[0] == 0
    doc = io.read_json(out)
    assert doc["objects"] == ["{}", "{x}", "{x,y}"]
    assert doc["generators"]["{x,y}"] == ["x", "y"]
    H = io.category_from_json(doc)
    assert H.hom("{x}", "{x,y}") == "true" and H.hom("{x,y}", "{x}") == "false"


def test_complete(capsys):
    code, out, _ = run(capsys, "--json", "complete", "--doctrine", "free", "--input", DATA / "chain2.json")
    doc = json.loads(out)
    assert code == 0 and len(doc["category"]["objects"]) == 3
    assert doc["unit"] == {"x": "{x}", "y": "{x,y}"}
    code, out, _ = run(capsys, "--json", "complete", "--doctrine", "identity", "--input", DATA / "chain2.json")
    assert len(json.loads(out)["category"]["objects"]) == 2
    code, out, _ = run(capsys, "complete", "--doctrine", "hausdorff", "--input", DATA / "line.json")
    assert code == 0 and out.startswith("8 objects")


def test_extend(capsys, tmp_path):
    dist = {
        "quantaloid": "bool",
        "dom": {"kind": "preorder", "elements": ["s"], "leq": [["s", "s"]]},
        "cod": {"kind": "preorder", "elements": ["t1", "t2"], "leq": [["t1", "t1"], ["t2", "t2"]]},
        "matrix": {"t1|s": "true", "t2|s": "false"},
    }
    f = tmp_path / "d.json"
    f.write_text(json.dumps(dist))
    code, out, _ = run(capsys, "--json", "extend", "--dist", f, "--doctrine", "hausdorff")
    doc = json.loads(out)
    assert code == 0
    assert doc["matrix"]["{t1}|{s}"] == "true"
    assert doc["matrix"]["{t1,t2}|{s}"] == "false"
    assert doc["matrix"]["{}|{}"] == "true"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "--json", "enumerate", "--what", "presheaves", "--input", DATA / "chain2.json")
    assert code == 0 and len(json.loads(out)) == 3
    assert run(capsys, "enumerate", "--input", DATA / "chain2.json", "--budget", "1")[0] == 4
    assert run(capsys, "enumerate", "--input", DATA / "line.json")[0] == 2


def test_laws_exit_codes(capsys):
    code, out, _ = run(capsys, "laws", "--suite", "lattice", "--budget", "5", "--seed", "1")
    assert code == 0 and "0 failed" in out
    code, out, _ = run(capsys, "--json", "laws", "--suite", "quantaloid", "--budget", "5", "--seed", "1")
    rep = json.loads(out)
    assert code == 0 and rep["suite"] == "quantaloid"
    assert all(set(e) <= {"law", "fixture", "status", "counterexample"} for e in rep["entries"])


def test_laws_report_failures(capsys):
    code, out, _ = run(capsys, "laws", "--suite", "doctrine", "--budget", "5", "--seed", "1")
    assert code == 3
    assert "doctrine:extension-joins" in out


def test_usage_errors():
    with pytest.raises(SystemExit):
        main(["complete", "--doctrine", "nope", "--input", "x"])
