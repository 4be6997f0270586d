import json
import subprocess
import sys

import pytest

from zetaspan.cli import main


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr()


def test_table_rows(capsys):
    code, out = run(["table", "--disc", "-4", "--bound", "10"], capsys)
    assert code == 0
    rows = {r["n"]: r for r in json.loads(out.out)["rows"]}
    assert rows["5"] == {"n": "5", "a_K": "2", "chi": "1", "zeta_chi": "2"}
    assert rows["1"] == {"n": "1", "a_K": "1", "chi": "1", "zeta_chi": "1"}
    assert rows["3"] == {"n": "3", "a_K": "0", "chi": "-1", "zeta_chi": "0"}


def test_table_via_d_flag(capsys):
    code, out = run(["table", "--d", "-1", "--bound", "5", "--format", "csv", "--no-header"], capsys)
    assert code == 0
    assert out.out.splitlines()[0] == "n,a_K,chi,zeta_chi"


def test_verify_pass(capsys):
    code, out = run(["verify", "--disc", "-4", "--bound", "2000", "--suite", "reduced-global"], capsys)
    assert code == 0
    assert json.loads(out.out)["records"][0]["verdict"] == "Confirmed"


def test_verify_literal_variant_fails(capsys):
    code, out = run(["verify", "--disc", "-4", "--suite", "reduced-global", "--variant", "literal-present-odd"], capsys)
    assert code == 1
    assert json.loads(out.out)["records"][0]["counterexample"]["label"] == "21"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--disc", "10"],
        ["verify", "--d", "4"],
        ["verify", "--disc", "-4", "--bound", "0"],
        ["verify", "--disc", "-4", "--suite", "bogus"],
        ["verify", "--disc", "-4", "--variant", "bogus"],
        ["fidelity", "--disc", "-4", "--suite", ""],
        ["table"],
        ["table", "--disc", "-4", "--format", "xml"],
    ],
)
def test_usage_errors(argv, capsys):
    code, _ = run(argv, capsys)
    assert code == 2


def test_jobs_env(monkeypatch, capsys):
    monkeypatch.setenv("ZETASPAN_JOBS", "x")
    assert run(["verify", "--disc", "-4", "--bound", "20"], capsys)[0] == 2
    monkeypatch.setenv("ZETASPAN_JOBS", "2")
    code, out = run(["verify", "--disc", "-4", "--bound", "50"], capsys)
    assert code == 0
    monkeypatch.delenv("ZETASPAN_JOBS")
    assert run(["verify", "--disc", "-4", "--bound", "50", "--jobs", "1"], capsys)[1].out == out.out


def test_fidelity_always_zero(capsys):
    code, out = run(["fidelity", "--disc", "-4", "--bound", "200"], capsys)
    assert code == 0
    recs = json.loads(out.out)["records"]
    verdicts = {(r["construction"], r["variant"]): r for r in recs}
    assert verdicts[("reduced-global", "normative-parity")]["verdict"] == "Confirmed"
    assert verdicts[("full-local", "printed-inert")]["verdict"] == "Diverges"


def test_deterministic_and_header(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["verify", "--disc", "5", "--bound", "100", "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()
    _, out = run(["verify", "--disc", "5", "--bound", "30", "--format", "md"], capsys)
    assert out.out.startswith("# zetaspan verify D=5 N=30 generated ")
    _, out = run(["verify", "--disc", "5", "--bound", "30", "--format", "md", "--no-header"], capsys)
    assert out.out.startswith("| construction")


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "zetaspan", "table", "--disc", "-3", "--bound", "3", "--format", "csv", "--no-header"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
    assert res.stdout.splitlines()[-1] == "3,1,0,1"
