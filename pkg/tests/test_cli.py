import json
import subprocess
import sys

import pytest

from cfckit.cli import main
from cfckit.harness import SCHEMA


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(out):
    lines = out.splitlines()
    assert lines[0] == SCHEMA
    return [json.loads(line) for line in lines[1:]]


def test_solve_star(capsys):
    code, out, _ = run(capsys, "solve", "Cs")
    assert code == 0 and "cfc = 3" in out and out.rstrip().endswith("valid")


def test_solve_structured(capsys):
    code, out, _ = run(capsys, "solve", "Dhc", "--output", "structured")  # C5
    recs = records(out)
    assert code == 0
    sol = next(r for r in recs if r["record"] == "solution")
    assert sol["value"] == 2
    assert sum(r["record"] == "witness" for r in recs) == 10


def test_solve_edge_list_from_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "solve", "--format", "edgelist", stdin="4 3\n0 1\n1 2\n2 3\n", monkeypatch=monkeypatch)
    assert code == 0 and "cfc = 2" in out


def test_verify_valid_and_invalid(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "Dhc", "--colors", "1,1,1,1,2")
    assert code == 0 and "valid" in out
    code, out, _ = run(capsys, "verify", "Dhc", "--colors", "1,1,1,1,1")
    assert code == 1 and "no conflict-free path" in out
    f = tmp_path / "col.txt"
    f.write_text("3 2\n0 1 1\n1 2 2\n")
    code, out, _ = run(capsys, "verify", "--format", "edgelist", "3 2\n0 1\n1 2\n", "--coloring", str(f))
    assert code == 0


def test_verify_needs_colours(capsys):
    code, _, err = run(capsys, "verify", "Cs")
    assert code == 2 and "--colors" in err


def test_malformed_graph_exits_2(capsys):
    code, _, err = run(capsys, "solve", "B?x")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "solve", "C?")  # disconnected
    assert code == 2


def test_budget_exhaustion_exits_2(capsys):
    code, _, err = run(capsys, "solve", "--budget", "3", "--format", "edgelist", "9 8\n" + "".join(f"{i} {i+1}\n" for i in range(8)))
    assert code == 2 and "resource limit" in err


def test_color_strategies(capsys):
    code, out, _ = run(capsys, "color", "Dhc", "--strategy", "two-edge-connected")
    assert code == 0 and out.startswith("5 5\n")
    code, _, err = run(capsys, "color", "Cs", "--strategy", "two-edge-connected")
    assert code == 2
    code, out, _ = run(capsys, "color", "Cs", "--strategy", "spanning-tree", "--output", "structured")
    assert records(out)[-1] == {"record": "result", "valid": True}


def test_classify_decompose_complement(capsys):
    code, out, _ = run(capsys, "classify", "Cs")
    assert code == 0 and out.startswith("predicted 3")
    code, out, _ = run(capsys, "decompose", "Cs", "--output", "structured")
    dec = records(out)[1]
    assert dec["record"] == "decomposition" and dec["h"] == 3 and dec["r"] == 0
    code, out, _ = run(capsys, "complement", "Bw")
    assert out == "B?\n"


def test_ng(capsys):
    code, out, _ = run(capsys, "ng", "Ch")  # P4
    assert code == 0 and "sum = 4" in out
    code, _, _ = run(capsys, "ng", "Cs")
    assert code == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--kind", "trees", "--order", "6")
    assert code == 0 and len(out.split()) == 6
    code, _, _ = run(capsys, "enumerate", "--order", "9")
    assert code == 2


def test_suite_command(capsys):
    code, out, _ = run(capsys, "suite", "thm-5.1", "--order", "6")
    assert code == 0 and out.endswith("PASS\n")
    code, _, err = run(capsys, "suite", "thm-5.1", "--order", "8")
    assert code == 2


def test_figures_command(capsys):
    code, out, _ = run(capsys, "figures", "--which", "G6", "--which", "H11")
    assert code == 0 and "ok   G6: expected 1, derived 1" in out
    code, out, _ = run(capsys, "figures", "--which", "H13")
    assert code == 1 and "FAIL H13: expected 1, derived 3" in out


@pytest.mark.parametrize("argv", [["solve", "Dhc"], ["suite", "cor-2.5", "--order", "5"]])
def test_module_entry_point(argv):
    proc = subprocess.run([sys.executable, "-m", "cfckit", *argv, "--output", "structured"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == SCHEMA
