import json
import subprocess
import sys

import pytest

from gfw.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_wu_betti_json(capsys):
    code, out, _ = run(capsys, "wu", "betti", "--d", "1", "--max-degree", "3")
    assert code == 0
    assert json.loads(out) == {"model": "WU_1", "d": 1, "max_degree": 3,
                               "betti": {"0": 1, "3": 1}}


def test_wu_betti_csv(capsys):
    code, out, _ = run(capsys, "wu", "betti", "--d", "1", "--max-degree", "3", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "degree,dim"


def test_gamma_defaults(capsys):
    code, out, _ = run(capsys, "gamma", "betti")
    assert code == 0 and json.loads(out)["betti"]["12"] == 31


@pytest.mark.parametrize("argv", [
    ["gamma", "betti", "--d", "5"],
    ["gamma", "betti", "--max-degree", "13"],
    ["wu", "betti", "--d", "3", "--max-degree", "16"],
    ["kernel", "--model", "gamma", "--d", "4", "--max-degree", "8"],
    ["ideal", "mingens", "--d", "9"],
    ["verify", "--suite", "nope"],
])
def test_invalid_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("gfw: error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["wu", "betti"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["gamma", "betti", "--jobs", "0"])
    assert exc.value.code == 2


def test_kernel_gamma_empty(capsys):
    code, out, _ = run(capsys, "kernel", "--model", "gamma", "--max-degree", "12")
    assert code == 0 and json.loads(out)["kernel"] == {}


def test_mingens_json(capsys):
    code, out, _ = run(capsys, "ideal", "mingens", "--d", "2")
    assert json.loads(out) == {"model": "U_2", "d": 2, "max_degree": 8,
                               "mingens": {"6": ["c1^3", "c1*c2"], "8": ["c2^2"]}}


def test_verify_all_passes(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    lines = out.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "products", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["model"] == "products"
    assert {r["status"] for r in data["report"]} == {"pass"}
    assert all(r["anchor"] for r in data["report"])


def test_verify_failure_exits_1(capsys, monkeypatch):
    from gfw import checks
    monkeypatch.setitem(checks.SUITES, "broken",
                        lambda: [checks.CheckResult("always fails", "x", False, "boom")])
    code, out, _ = run(capsys, "verify", "--suite", "broken")
    assert code == 1 and out.startswith("FAIL")


def test_jobs_output_identical(capsys):
    outs = set()
    for jobs in ("1", "2", "4"):
        code, out, _ = run(capsys, "gamma", "betti", "--jobs", jobs)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_output_file(capsys, tmp_path):
    path = tmp_path / "b.csv"
    code, out, _ = run(capsys, "wu", "betti", "--d", "2", "--max-degree", "8",
                       "--format", "csv", "--output", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("degree,dim\n0,1\n")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gfw", "ideal", "mingens", "--d", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["mingens"] == {"4": ["c1^2"]}
