import json
import subprocess
import sys

import pytest

from baxter.automaton import build_automaton, export_json, load_json
from baxter.cli import main


@pytest.fixture
def matrix_file(tmp_path):
    def write(text):
        p = tmp_path / "m.txt"
        p.write_text(text)
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_check(capsys, matrix_file):
    assert run(capsys, "check", matrix_file("10\n01\n")) == (0, "BAXTER\n")
    code, out = run(capsys, "check", matrix_file("11\n11\n"))
    assert code == 1
    assert "violation: unsatisfied clockwise pinwheel (1,1)" in out
    code, out = run(capsys, "check", matrix_file("00\n11\n"))
    assert code == 1 and out.splitlines()[1] == "violation: zero row 1"
    code, out = run(capsys, "check", matrix_file("01\n01\n"))
    assert code == 1 and "violation: zero column 1" in out


def test_check_json_and_errors(capsys, matrix_file):
    code, out = run(capsys, "check", "--report", "json", matrix_file("11\n11\n"))
    doc = json.loads(out)
    assert code == 1 and doc["baxter"] is False and len(doc["violations"]) == 2
    assert run(capsys, "check", matrix_file("1 0\n"))[0] == 2
    assert run(capsys, "check", "/nonexistent/file")[0] == 2


def test_count(capsys):
    assert run(capsys, "count", "-r", "3", "-k", "3") == (0, "69\n")
    assert run(capsys, "count", "-r", "1", "-k", "9") == (0, "1\n")
    for method in ("dp", "skeleton", "brute"):
        assert run(capsys, "count", "-r", "3", "-k", "4", "--method", method) == (0, "203\n")
    code, out = run(capsys, "count", "-r", "2", "-k", "2", "--by-extra", "--format", "json")
    assert json.loads(out) == {"rows": 2, "cols": 2, "by_extra": {"0": 2, "1": 4}, "total": 6}
    code, out = run(capsys, "count", "-r", "2", "-k", "2", "--by-extra", "--method", "skeleton")
    assert out.splitlines()[-1].split() == ["total", "6"]


def test_count_budget(capsys):
    assert run(capsys, "count", "-r", "5", "-k", "5", "--method", "brute")[0] == 2
    assert run(capsys, "count", "-r", "0", "-k", "5")[0] == 2
    assert main(["count", "-r", "x"]) == 2


def test_poly(capsys):
    assert run(capsys, "poly", "-r", "2") == (0, "k^2 + 3k - 4 (k >= 2)\n")
    assert run(capsys, "poly", "-r", "1") == (0, "1 (k >= 1)\n")
    code, out = run(capsys, "poly", "-r", "3", "--extras")
    lines = out.splitlines()
    assert len(lines) == 3
    assert "(1/3)k^4 - k^3 + (2/3)k^2" in lines[0]
    assert "4k^3 - 12k^2 + 15k - 8" in lines[1]
    assert "6k^2 - 13k + 11" in lines[2]
    code, out = run(capsys, "poly", "-r", "2", "--format", "json")
    assert json.loads(out)["polynomial"] == {"coefficients": ["-4/1", "3/1", "1/1"],
                                             "threshold": 2}


def test_automaton(capsys, tmp_path):
    code, out = run(capsys, "automaton", "-r", "2", "--format", "dot")
    assert out.count(" -> ") == 17 and out.count("peripheries=") == 8
    for name in ("11", "14", "41", "13", "31"):
        assert f'[label="{name}", peripheries=2]' in out
    target = tmp_path / "a3.json"
    assert run(capsys, "automaton", "-r", "3", "--format", "json", "-o", str(target))[0] == 0
    A = load_json(target.read_text())
    B = build_automaton(3)
    assert A.states == B.states and A.edges == B.edges


def test_verify(capsys, tmp_path):
    code, out = run(capsys, "verify", "-r", "2", "--skip-tables")
    assert code == 0 and out.splitlines()[-1] == "10/10 checks passed"
    A = build_automaton(2)
    names = A.labels()
    doc = json.loads(export_json(A))
    for e in doc["edges"]:
        if names[e["from"]] == "11" and e["symbol"] == "10":
            e["to"] = names.index("12")
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out = run(capsys, "verify", "--automaton", str(bad))
    assert code == 1 and "FAIL  depth_monotonicity" in out


def test_bench(capsys):
    code, out = run(capsys, "bench", "-r", "3", "-k", "4")
    assert code == 0
    assert "203" in out and "brute_count" in out


def test_output_deterministic():
    cmd = [sys.executable, "-m", "baxter", "automaton", "-r", "3", "--format", "dot"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b and a.startswith("digraph")
