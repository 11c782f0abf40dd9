import json
import subprocess
import sys

import pytest

from xbtool.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,expected", [
    (["--graph6", "Bw"], "p[1,1,1] + 3t p[2,1] + (3t^2+t^3) p[3]"),
    (["--graph6", "A_", "--invariant", "x"], "p[1,1] - p[2]"),
    (["--graph6", "Bw", "--eval", "1,1,1"], "28/1"),
    (["--graph6", "A_", "--invariant", "x", "--eval", "0,1,1"], "2/1"),
    (["--graph6", "Bw", "--invariant", "tutte"], "x^2 + x + y"),
    (["--graph6", "Bw", "--invariant", "tutte", "--eval", "1,1"], "3/1"),
    (["--graph6", "A_", "--invariant", "w"], "x[1,1] + x[2]"),
    (["--graph6", "A_", "--invariant", "b", "--r", "2", "--q", "1", "--t", "1"], "24"),
    (["--graph6", "@", "--weights", "3"], "p[3]"),
    (["--graph6", "Bw", "--method", "subset"], "p[1,1,1] + 3t p[2,1] + (3t^2+t^3) p[3]"),
])
def test_compute(capsys, argv, expected):
    code, out, _ = run(capsys, "compute", *argv)
    assert code == EXIT_OK and out.strip() == expected


def test_compute_from_edgelist(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("2 1\n2 1\n0 1\n")
    code, out, _ = run(capsys, "compute", "--edgelist", str(f))
    assert code == EXIT_OK and out.strip() == "p[2,1] + t p[3]"


@pytest.mark.parametrize("argv", [
    ["compute", "--graph6", "A!"],
    ["compute", "--graph6", "Bw", "--weights", "1,2"],
    ["compute", "--graph6", "Bw", "--invariant", "b"],
    ["compute", "--graph6", "Bw", "--eval", "x"],
    ["compute", "--edgelist", "/nonexistent/file"],
    ["frobnicate"],
    [],
    ["construct", "--method", "split", "--seed-graph6", "Cr", "--vertices", "0", "0", "1", "1"],
    ["construct", "--method", "fixture", "--name", "nope"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE and err


def test_construct_then_verify(capsys, tmp_path):
    prefix = str(tmp_path / "equal-xb-a")
    code, out, _ = run(capsys, "construct", "--method", "fixture", "--name", "equal-xb-a",
                       "--out", prefix)
    assert code == EXIT_OK and out.strip() == prefix + ".json"
    manifest = json.loads((tmp_path / "equal-xb-a.json").read_text())
    assert manifest["claims"] == {"equal_x": True, "equal_xb": True, "isomorphic": False}
    assert (tmp_path / "equal-xb-a.g1.txt").read_text() == manifest["g1"]["edgelist"]
    code, out, _ = run(capsys, "verify", "--pair", prefix + ".json")
    assert code == EXIT_OK
    assert out.splitlines() == ["equal_x: true", "equal_xb: true", "isomorphic: false"]


def test_construct_to_stdout(capsys):
    code, out, _ = run(capsys, "construct", "--method", "ore", "--seed-graph6", "D`[",
                       "--vertices", "0", "1", "4", "2")
    assert code == EXIT_OK
    manifest = json.loads(out)
    assert manifest["method"] == "path_swap"
    assert manifest["claims"]["equal_x"] and not manifest["claims"]["isomorphic"]


def test_construct_large_pair_reports_unknown_xb(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--method", "double", "--seed-graph6", "Ch",
                       "--vertices", "0", "3")
    assert code == EXIT_OK
    assert json.loads(out)["claims"]["equal_xb"] is None
    p = tmp_path / "pair.json"
    p.write_text(out)
    code, out, _ = run(capsys, "verify", "--pair", str(p))
    assert code == EXIT_OK and "equal_xb: unknown" in out


def test_verify_graph6_pair_and_mismatch(capsys, tmp_path):
    p = tmp_path / "pair.txt"
    p.write_text("DR[\nD`{\n")
    code, out, _ = run(capsys, "verify", "--pair", str(p))
    assert code == EXIT_OK and "equal_x: true" in out and "equal_xb: false" in out
    p.write_text("Bw\nBW\n")
    code, out, err = run(capsys, "verify", "--pair", str(p))
    assert code == EXIT_VERIFY and "equal_x" in err
    m = tmp_path / "lie.json"
    code, out, _ = run(capsys, "construct", "--method", "fixture", "--name", "equal-xb-a")
    data = json.loads(out)
    data["claims"]["isomorphic"] = True
    m.write_text(json.dumps(data))
    code, _, err = run(capsys, "verify", "--pair", str(m))
    assert code == EXIT_VERIFY and "isomorphic" in err


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "--max-n", "3", "--min-n", "1")
    assert code == EXIT_OK and len(out.split()) == 1 + 2 + 4
    code, out, _ = run(capsys, "generate", "--max-n", "2")
    assert out.split()[0] == "?"


def test_census_report_and_cache(capsys, tmp_path, monkeypatch):
    corpus = tmp_path / "five.g6"
    _, out, _ = run(capsys, "generate", "--max-n", "5", "--min-n", "1")
    corpus.write_text(out)
    cache = tmp_path / "xb.cache"
    monkeypatch.setenv("XBTOOL_CACHE", str(cache))
    report = tmp_path / "report.json"
    code, out, _ = run(capsys, "census", "--input", str(corpus), "--report", str(report),
                       "--jobs", "2")
    assert code == EXIT_OK
    assert "equal-X nonisomorphic pairs: 1 all" in out
    data = json.loads(report.read_text())
    assert data["counts"]["unique"] == 52 and len(data["pairs"]) == 1
    assert cache.exists() and cache.read_text().count("\n") == 52
    code, out, err = run(capsys, "census", "--input", str(corpus))
    assert json.loads(out) == data and "triangle-free flags: 0" in err


def test_census_reads_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("Bw\nBW\n"))
    code, out, _ = run(capsys, "census", "--input", "-")
    assert code == EXIT_OK and json.loads(out)["counts"]["unique"] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "xbtool", "compute", "--graph6", "A_"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "p[1,1] + t p[2]"
    proc = subprocess.run([sys.executable, "-m", "xbtool", "bogus"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 1
