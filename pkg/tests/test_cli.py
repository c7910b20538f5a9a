import io
import json

import pytest

from grouplaw.cli import run_cli
from grouplaw.prover import VerificationReport


def run(argv):
    out = io.StringIO()
    code = run_cli(argv, out=out)
    return code, out.getvalue()


def test_add_case_b():
    assert run(["add", "--p", "7", "--a", "1", "--b", "1", "--point", "0,1", "--point", "0,6"]) == (0, "O\n")


def test_add_and_mul():
    assert run(["add", "--p", "7", "--a", "1", "--b", "1", "--point", "0,1", "--point", "2,5"]) == (0, "2,2\n")
    assert run(["mul", "--p", "7", "--a", "1", "--b", "1", "--point", "0,1", "--scalar", "2"]) == (0, "2,5\n")
    assert run(["mul", "--p", "7", "--a", "1", "--b", "1", "--point", "0,1", "--scalar", "5"]) == (0, "O\n")


def test_points():
    code, out = run(["points", "--p", "7", "--a", "1", "--b", "1"])
    assert code == 0
    assert out.split() == ["O", "0,1", "0,6", "2,2", "2,5"]


def test_axioms_exhaustive():
    code, out = run(["axioms", "--p", "7", "--a", "1", "--b", "1", "--exhaustive"])
    assert code == 0
    assert "failures=0" in out.splitlines()[0]


def test_axioms_random_deterministic():
    argv = ["axioms", "--p", "1000003", "--a", "2", "--b", "3", "--trials", "50", "--seed", "4"]
    assert run(argv) == run(argv)
    assert run(argv)[0] == 0


@pytest.mark.parametrize("argv", [
    ["add", "--p", "7", "--a", "1", "--b", "1", "--point", "1,1", "--point", "O"],
    ["add", "--p", "8", "--a", "1", "--b", "1", "--point", "O", "--point", "O"],
    ["add", "--p", "5", "--a", "0", "--b", "0", "--point", "O", "--point", "O"],
    ["add", "--p", "7", "--a", "1", "--b", "1", "--point", "0,1"],
    ["points", "--p", "100003", "--a", "1", "--b", "1"],
    ["sweep", "--max-p", "5000"],
    ["prove", "--lemma", "Bogus"],
    ["mul", "--p", "7", "--a", "1", "--b", "1", "--point", "0,1", "--scalar", "-2"],
])
def test_input_errors_exit_2(argv, capsys):
    assert run(argv)[0] == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [["add", "--bogus"], ["frobnicate"], ["points", "--p", "7", "--a", "1", "--b", "1", "--extra", "3"]])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli(argv)
    assert exc.value.code == 2


def test_sweep_small(tmp_path):
    path = tmp_path / "sweep.json"
    code, out = run(["sweep", "--max-p", "5", "--json", str(path)])
    assert code == 0
    d = json.loads(path.read_text())
    assert d["failures"] == 0 and d["primes"] == [5]


def test_random_json_is_byte_identical(tmp_path):
    p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
    for p in (p1, p2):
        assert run(["random", "--trials", "60", "--bits", "31", "--seed", "9", "--json", str(p)])[0] == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_prove_selected_lemmas(tmp_path):
    path = tmp_path / "report.json"
    code, out = run(["prove", "--lemma", "PmbSimplification", "--lemma", "AddMinusB", "--json", str(path)])
    assert code == 0
    d = json.loads(path.read_text())
    assert [c["id"] for c in d["checks"]] == ["PmbSimplification", "AddMinusB"]
    assert d["summary"] == {"pass": 2, "fail": 0, "flagged": 0}
    assert VerificationReport.from_json(path.read_text()).to_dict() == d


def test_prove_audit_output():
    code, out = run(["prove", "--lemma", "Claim5Square", "--audit"])
    assert code == 0
    assert "TranscriptionAudit     flagged" in out
    assert "[printed] printed x1=x2" in out
