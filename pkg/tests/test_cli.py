import json
import subprocess
import sys

import pytest

from symbpow.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_analyze(capsys):
    code, out = run(capsys, "analyze", "fixture:pentagon")
    assert code == 0 and not out["matroid"] and out["violation"] == {"F": [1, 2], "G": [3, 4], "i": 2}
    assert out["multiplicity"] == 5 and out["f_vector"] == [1, 5, 5]


def test_covers_and_hilbert(capsys):
    code, out = run(capsys, "covers", "fixture:triangle", "--k", "2")
    assert code == 0 and len(out) == 4
    code, out = run(capsys, "hilbert", "fixture:decagon", "--kmax", "3")
    assert out["count"] == [17, 83, 254]


def test_symbolic_power(capsys, tmp_path):
    code, out = run(capsys, "symbolic-power", "fixture:triangle", "--m", "2")
    assert out["generators"] == [[0, 2, 2], [1, 1, 1], [2, 0, 2], [2, 2, 0]]
    code, out = run(capsys, "symbolic-power", "fixture:triangle", "--m", "1", "--side", "sr")
    assert out["generators"] == [[1, 1, 1]]


def test_betti_and_depth(capsys, tmp_path):
    ideal = tmp_path / "ideal.json"
    ideal.write_text(json.dumps({"n": 3, "generators": [[1, 1, 0], [1, 0, 1], [0, 1, 1]]}))
    code, out = run(capsys, "betti", str(ideal))
    assert [sum(r["rank"] for r in out if r["i"] == i) for i in (0, 1)] == [3, 2]
    assert [r["degree"] for r in out if r["i"] == 1] == [[1, 1, 1]]
    code, out = run(capsys, "depth", "fixture:rp2", "--side", "sr", "--char", "2")
    assert out["depth"] == 2 and not out["cohen_macaulay"]
    code, out = run(capsys, "depth", "fixture:pentagon", "--m", "2")
    assert out["depth"] < out["krull_dim"]


def test_verify_theorem(capsys, tmp_path):
    dest = tmp_path / "rep.json"
    assert main(["verify-theorem", "fixture:pentagon", "--mmax", "2", "--chars", "0", "--out", str(dest)]) == 0
    rep = json.loads(dest.read_text())
    assert rep["detection"] == "detected" and rep["theorem_consistent"]


def test_run_corpus(capsys, tmp_path):
    desc = tmp_path / "c.json"
    desc.write_text(json.dumps({"cycles": [5], "skeletons": [[5, 2]], "m_max": 2, "chars": [0]}))
    code, out = run(capsys, "run-corpus", str(desc))
    assert code == 0 and out["summary"]["complexes"] == 2
    code, out = run(capsys, "run-corpus", str(desc), "--budget", "0")
    assert code == 3 and out["error"] == "BudgetExceeded"


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 2, "facets": [[1, 3]]}))
    code, out = run(capsys, "analyze", str(bad))
    assert code == 1 and out["error"] == "VertexOutOfRange"
    with pytest.raises(SystemExit):
        main(["covers", "fixture:triangle"])


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "symbpow.cli", "analyze", "fixture:triangle"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["matroid"] is True
