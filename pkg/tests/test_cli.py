import json
import subprocess
import sys

import pytest

from adinkras.cli import main
from fixtures import GR44


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def test_count(capsys):
    assert run_json(capsys, "count", "--n", "4", "--d", "4") == (0, {
        "n": 4, "d": 4, "k": 1, "codes": 1, "unsigned_classes": 6, "signed_classes": 1536})
    code, out = run_json(capsys, "count", "--n", "8", "--d", "8", "--signed")
    assert (out["unsigned_classes"], out["signed_classes"]) == (151200, 79272345600)
    code, out = run_json(capsys, "count", "--n", "4", "--d", "3")
    assert code == 0 and out["unsigned_classes"] == out["signed_classes"] == 0
    code, out = run_json(capsys, "count", "--n", "2", "--d", "2", "--lists")
    assert (out["unsigned_classes"], out["signed_classes"]) == (2, 16)


def test_codes(capsys):
    assert run_json(capsys, "codes", "--n", "8", "--k", "4", "--count-only") == (0, {"count": 30})
    assert run_json(capsys, "codes", "--n", "4", "--k", "1") == (0, [{"n": 4, "k": 1, "generators": ["1111"]}])
    assert run_json(capsys, "codes", "--n", "4", "--k", "2") == (0, [])
    code, _, err = run(capsys, "codes", "--n", "13", "--k", "2")
    assert code == 3 and "N <= 12" in err


def test_build_square(capsys, tmp_path):
    code_file = write(tmp_path / "code.json", {"n": 2, "k": 0, "generators": []})
    out = tmp_path / "a.json"
    code, summary = run_json(capsys, "build", "--code", code_file, "--out", str(out))
    assert code == 0 and summary["dashings"] == 8
    a = json.loads(out.read_text())
    assert len(a["vertices"]) == 4 and sum(e["dash"] for e in a["edges"]) % 2 == 1


def test_build_by_index_with_dot(capsys, tmp_path):
    out, dot = tmp_path / "a.json", tmp_path / "a.dot"
    code, summary = run_json(capsys, "build", "--n", "4", "--k", "1", "--index", "0",
                             "--out", str(out), "--dot", str(dot), "--dash", "index:255")
    assert code == 0 and summary["vertices"] == 8
    text = dot.read_text()
    assert {c for c in ("black", "red", "green", "blue") if f"color={c}" in text} == {"black", "red", "green", "blue"}
    assert not list(tmp_path.glob(".*.tmp"))


def test_build_out_of_range(capsys, tmp_path):
    out = tmp_path / "a.json"
    code, _, err = run(capsys, "build", "--n", "4", "--k", "1", "--index", "0", "--out", str(out), "--dash", "index:256")
    assert code == 4 and "0..255" in err and not out.exists()
    code, _, _ = run(capsys, "build", "--n", "4", "--k", "1", "--index", "1", "--out", str(out))
    assert code == 4


def test_verify(capsys, tmp_path):
    good = {"d": 4, "n": 4, "matrices": GR44}
    code, out = run_json(capsys, "verify", "--matrices", write(tmp_path / "m.json", good))
    assert code == 0 and out["pass"] and out["failures"] == []
    flipped = json.loads(json.dumps(good))
    flipped["matrices"][1][0][1] = 1
    code, out = run_json(capsys, "verify", "--matrices", write(tmp_path / "f.json", flipped))
    assert code == 1 and not out["pass"]
    assert {(f["i"], f["j"]) for f in out["failures"]} >= {(1, 2), (2, 1)}
    assert all(2 in (f["i"], f["j"]) for f in out["failures"])
    broken = json.loads(json.dumps(good))
    broken["matrices"][2][1][2] = 2
    code, _, err = run(capsys, "verify", "--matrices", write(tmp_path / "b.json", broken))
    assert code == 2 and "matrix 3: row 2" in err


def test_verify_unreadable(capsys, tmp_path):
    bad = tmp_path / "x.json"
    bad.write_text("{not json")
    assert run(capsys, "verify", "--matrices", str(bad))[0] == 2
    assert run(capsys, "verify", "--matrices", str(tmp_path / "missing.json"))[0] == 2


def test_oracle(capsys, tmp_path):
    code, out = run_json(capsys, "oracle", "--n", "2", "--d", "2", "--signed")
    assert out["brute_sets"] == out["formula"] == 8
    assert code == (0 if out["match"] else 1) and list(out)[:3] == ["brute", "formula", "match"]
    code, out = run_json(capsys, "oracle", "--n", "4", "--d", "4")
    assert out["brute_sets"] == out["formula"] == 6
    assert run_json(capsys, "oracle", "--codes", "--n", "8", "--k", "4") == (
        0, {"brute": 30, "formula": 30, "match": True})
    code_file = write(tmp_path / "c.json", {"n": 4, "k": 1, "generators": ["1111"]})
    assert run_json(capsys, "oracle", "--dashings", code_file) == (0, {"brute": 256, "formula": 256, "match": True})
    assert run(capsys, "oracle", "--n", "6", "--d", "4")[0] == 3


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--n", "0", "--d", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["build", "--out", "x", "--dash", "last"])
    assert exc.value.code == 2
    assert run(capsys, "build", "--out", "x")[0] == 2


def test_deterministic_entry_point():
    cmd = [sys.executable, "-m", "adinkras", "codes", "--n", "8", "--k", "3"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == subprocess.run(cmd, capture_output=True, check=True).stdout
    assert len(json.loads(first)) == 345
