"""Command-line behaviour: reports, determinism and exit codes."""

import json
import subprocess
import sys

import pytest

from contactlie.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def heis_file(tmp_path, capsys):
    path = tmp_path / "heis.json"
    code, _, _ = run(capsys, "construct", "heisenberg", "1", "-o", str(path))
    assert code == 0
    return path


def test_construct_writes_a_loadable_file(heis_file):
    obj = json.loads(heis_file.read_text())
    assert obj["basis"] == ["x", "y", "z"] and obj["dim"] == 3
    assert obj["splitting"] == {"levi": [0], "ideal": [1, 2]}


def test_analyze_heisenberg(capsys, heis_file):
    code, out, _ = run(capsys, "analyze", str(heis_file))
    rep = json.loads(out)
    assert code == 0
    assert rep["index"] == 1 and rep["contact"] is True
    assert rep["p"] == "z" and rep["f"] == "z^2"
    assert rep["semidirect"]["rais"]["ok"] is True


def test_analyze_qbar_one_one(capsys, tmp_path):
    path = tmp_path / "qbar.json"
    run(capsys, "construct", "qbar", "1", "1", "-o", str(path))
    code, out, _ = run(capsys, "analyze", str(path))
    rep = json.loads(out)
    assert rep["index"] == 1 and rep["contact"] is False
    assert rep["stabiliser_class"] == "nilpotent"
    assert rep["contact_certified"] is True and rep["contact_method"] == "symbolic"


def test_analyze_sl2_codim2(capsys, tmp_path):
    path = tmp_path / "sl2.json"
    run(capsys, "construct", "sl", "2", "-o", str(path))
    code, out, _ = run(capsys, "analyze", str(path), "--semiinv", "--degree", "2")
    rep = json.loads(out)
    assert rep["index"] == 1 and rep["contact"] is True and rep["codim2"] is True
    assert rep["semiinv"]["generators"][0]["poly"] == "4*E12*E21 + H1^2"


def test_probabilistic_verdicts_carry_bounds(capsys, tmp_path):
    path = tmp_path / "qbar13.json"
    run(capsys, "construct", "qbar", "1", "3", "-o", str(path))
    code, out, _ = run(capsys, "analyze", str(path), "--no-symbolic")
    rep = json.loads(out)
    assert rep["contact"] is False and rep["contact_certified"] is False
    assert 0 < rep["contact_failure_bound"] < 1e-16
    assert "index_failure_bound" in rep


def test_same_seed_gives_identical_reports(capsys, heis_file):
    a = run(capsys, "analyze", str(heis_file), "--seed", "7")[1]
    b = run(capsys, "analyze", str(heis_file), "--seed", "7")[1]
    assert a == b
    c = run(capsys, "verify", "ex-k", "--seed", "3")[1]
    d = run(capsys, "verify", "ex-k", "--seed", "3")[1]
    assert c == d


def test_pretty_output(capsys, heis_file):
    code, out, _ = run(capsys, "analyze", str(heis_file), "--pretty")
    assert code == 0 and "index" in out and not out.lstrip().startswith("{")


def test_verify_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "notc")
    res = json.loads(out)
    assert code == 0 and res["passed"] and res["suite"] == "notc"


def test_verify_restricted_families(capsys):
    code, out, _ = run(capsys, "verify", "equivalence", "--families", "heisenberg,sl(2)")
    res = json.loads(out)
    assert code == 0 and len(res["cases"]) == 5


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "no-such-suite"],
        ["analyze", "/nonexistent/file.json"],
        ["construct", "nonsense"],
        ["construct", "q", "0", "0"],
        ["analyze", "x.json", "--trials", "0"],
        ["bogus-command"],
        [],
    ],
)
def test_input_errors_exit_2(capsys, argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "x.json").write_text('{"dim": 1, "basis": ["a"], "brackets": []}')
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_jacobi_violation_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({
        "dim": 3, "basis": ["a", "b", "c"],
        "brackets": [{"i": 0, "j": 1, "c": {"1": "1"}}, {"i": 0, "j": 2, "c": {"2": "1"}}, {"i": 1, "j": 2, "c": {"0": "1"}}],
    }))
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 2 and "jacobi" in err


def test_malformed_json_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run(capsys, "analyze", str(path))[0] == 2


def test_failing_verification_exits_1(capsys, monkeypatch):
    from contactlie import verify

    cells = [verify.Cell("index", "heisenberg(1) wrong", "heisenberg", (1,), 99)]
    monkeypatch.setitem(verify.SUITES, "broken", lambda o: cells)
    code, out, _ = run(capsys, "verify", "broken")
    assert code == 1 and json.loads(out)["passed"] is False


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "contactlie", "construct", "heisenberg", "1"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["dim"] == 3


def test_parallel_cells_match_serial_cells():
    from contactlie.verify import run_suite

    serial = run_suite("ex-k", seed=5, jobs=1).to_dict()
    parallel = run_suite("ex-k", seed=5, jobs=2).to_dict()
    assert serial == parallel
