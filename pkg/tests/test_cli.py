import csv
import io
import json
import subprocess
import sys

import pytest

from secplanes.cli import COMMANDS, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def test_rho():
    rec = call_json("rho", "--g", "4", "--r", "1", "--d", "3")
    assert rec["outputs"] == {"rho": 0}
    assert rec["command"] == "rho"
    assert rec["inputs"] == {"g": 4, "r": 1, "d": 3}
    assert rec["validity_flags"] == []
    assert "version" in rec


def test_castelnuovo_and_cayley():
    rec = call_json("castelnuovo", "--d", "5", "--g", "0", "--r", "3")
    assert rec["outputs"] == {"count": 1, "formula": "GENERAL_SUM"}
    assert rec["validity_flags"] == ["out-of-hypothesis"]
    rec = call_json("cayley", "--d", "6", "--g", "1")
    assert rec["outputs"]["count"] == 3 and rec["outputs"]["formula"] == "CAYLEY_R3"


def test_chain_count():
    assert call_json("chain-count", "--g", "4", "--r", "1", "--d", "3")["outputs"] == {"count": 2}
    rec = call_json("chain-count", "--g", "3", "--r", "3", "--d", "6", "--start", "0,0,1,2")
    assert rec["outputs"]["count"] >= 1


def test_chain_enum_limit():
    rec = call_json("chain-enum", "--g", "8", "--r", "1", "--d", "5", "--limit", "3")
    assert rec["outputs"]["returned"] == 3 and rec["outputs"]["truncated"] is True
    assert rec["validity_flags"] == ["truncated"]


def test_not_rho_zero_exit_code():
    code, out, err = call("chain-count", "--g", "1", "--r", "1", "--d", "1")
    assert code == 3 and out == "" and "NOT_RHO_ZERO" in err
    code, _, err = call("chain-count", "--g", "1", "--r", "1", "--d", "1", "--quiet")
    assert code == 3 and err == ""


@pytest.mark.parametrize("argv", [
    ["rho", "--g", "4"],
    ["nope"],
    ["rho-ram", "--g", "3", "--r", "3", "--d", "6", "--alpha", "0,0,5,2"],
    ["rho-ram", "--g", "3", "--r", "3", "--d", "6", "--alpha", "x"],
    ["table", "rho", "--g", "a:b", "--r", "1", "--d", "1"],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_invalid_problem_is_precondition_failure():
    assert call("verdict", "--g", "1", "--d", "4", "--r", "3", "--e", "3", "--f", "3")[0] == 3
    assert call("construct", "--g", "8", "--d", "4", "--r", "3", "--e", "4", "--f", "2")[0] == 3
    assert call("power-bound", "--g", "3", "--r", "3", "--d", "6", "--n", "2")[0] == 3


def test_verdict_and_construct():
    rec = call_json("verdict", "--g", "1", "--d", "4", "--r", "3", "--e", "3", "--f", "1")
    assert rec["outputs"]["status"] == "EMPTY_GENERAL_CURVE"
    rec = call_json("construct", "--g", "8", "--d", "10", "--r", "3", "--e", "4", "--f", "2")
    out = rec["outputs"]
    assert out["alpha"] == [3, 3] and out["beta"] == [2, 2]
    assert out["merged"] == [3, 4, 7, 8] and out["gamma"] == [2, 2, 4, 4]
    assert out["gamma_identity"] is True


def test_bounds():
    rec = call_json("square-bound", "--g", "3", "--r", "3", "--d", "6", "--alpha", "0,0,1,2")
    assert rec["outputs"]["threshold"] == 10 == rec["outputs"]["riemann_roch_ceiling"]
    rec = call_json("power-bound", "--g", "3", "--r", "3", "--d", "6", "--alpha", "0,0,1,2", "--n", "3")
    assert rec["outputs"]["threshold"] == 14 and rec["outputs"]["m"] == 2


def test_secant_dim():
    rec = call_json("secant-dim", "--g", "8", "--d", "10", "--r", "3", "--e", "4", "--f", "2")
    assert rec["outputs"]["expected_cycle_dim"] == 0
    assert rec["outputs"]["family_dim_bound"] == 4


def test_consistency_command():
    rec = call_json("consistency", "--dmax", "40", "--gmax", "25")
    assert rec["outputs"]["mismatches"] == 0
    assert rec["outputs"]["checked"] == 37 * 26


def test_csv_output():
    code, out, _ = call("rho", "--g", "4", "--r", "1", "--d", "3", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["g", "r", "d", "rho", "validity_flags"], ["4", "1", "3", "0", ""]]
    assert out.endswith("\r\n")


def test_csv_quotes_nested_values():
    code, out, _ = call("construct", "--g", "8", "--d", "10", "--r", "3", "--e", "4", "--f", "2",
                        "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert json.loads(rows[0]["merged"]) == [3, 4, 7, 8]


def test_table_sweep():
    code, out, _ = call("table", "castelnuovo", "--d", "4:6", "--g", "0,1", "--r", "3")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [(r["d"], r["g"], r["count"]) for r in rows] == [
        ("4", "0", "0"), ("4", "1", "0"), ("5", "0", "1"), ("5", "1", "0"), ("6", "0", "6"), ("6", "1", "3"),
    ]


def test_table_records_errors_and_json():
    code, out, _ = call("table", "chain-count", "--g", "1:4", "--r", "1", "--d", "3")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 4
    assert rows[3]["count"] == "2"
    assert "rho" in rows[0]["error"] and rows[0]["validity_flags"] == "error"
    code, out, _ = call("table", "rho", "--g", "0:2", "--r", "1", "--d", "2", "--format", "json")
    recs = json.loads(out)
    assert [r["outputs"]["rho"] for r in recs] == [2, 1, 0]


def test_deterministic_round_trip():
    samples = [
        ["rho", "--g", "7", "--r", "2", "--d", "9"],
        ["rho-ram", "--g", "3", "--r", "3", "--d", "6", "--alpha", "0,0,1,2"],
        ["secant-dim", "--g", "8", "--d", "10", "--r", "3", "--e", "4", "--f", "2"],
        ["verdict", "--g", "8", "--d", "10", "--r", "3", "--e", "5", "--f", "3"],
        ["castelnuovo", "--d", "13", "--g", "4", "--r", "4"],
        ["cayley", "--d", "9", "--g", "3"],
        ["consistency", "--dmax", "10", "--gmax", "3"],
        ["chain-count", "--g", "6", "--r", "2", "--d", "6"],
        ["chain-enum", "--g", "4", "--r", "1", "--d", "3"],
        ["construct", "--g", "8", "--d", "10", "--r", "3", "--e", "4", "--f", "2"],
        ["power-bound", "--g", "3", "--r", "3", "--d", "6", "--alpha", "0,0,1,2", "--n", "5"],
        ["square-bound", "--g", "3", "--r", "3", "--d", "6", "--alpha", "0,0,1,2"],
    ]
    assert {s[0] for s in samples} == set(COMMANDS)
    for argv in samples:
        code, first, _ = call(*argv)
        assert code == 0
        rec = json.loads(first)
        replay = [rec["command"]]
        for k, v in rec["inputs"].items():
            if v == "":
                continue
            replay += [f"--{k}", str(v)]
        code, second, _ = call(*replay)
        assert code == 0 and second == first
        assert first == json.dumps(rec, sort_keys=True) + "\n"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "secplanes", "rho", "--g", "4", "--r", "1", "--d", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["outputs"]["rho"] == 0
    proc = subprocess.run([sys.executable, "-m", "secplanes", "rho"], capture_output=True, text=True)
    assert proc.returncode == 2
