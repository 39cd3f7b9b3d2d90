import io
import json
import subprocess
import sys

import pytest

from detzeta.cli import emit_report, run
from detzeta.lring import lclass_from_json
from detzeta.orbits import OrbitIndex, class_orbit
from detzeta.strata import stratum_class


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_zeta_command():
    code, out, _ = call("zeta", "--m", "3", "--n", "3", "--r", "2")
    assert code == 0
    assert out == "Z_top(s) = 1/((1+2s/9)(1+s/4))\n"


def test_monodromy_command():
    code, out, _ = call("monodromy", "--m", "3", "--n", "3", "--r", "2", "--rank", "0", "--q", "3")
    assert code == 0
    assert out == "Z_mon = 1 - t^2\n"
    code, out, _ = call("monodromy", "--m", "3", "--n", "3", "--r", "2", "--rank", "0", "--no-alpha")
    assert code == 0 and out == "Z_mon = 1\n"


def test_eigenvalue_json():
    code, out, _ = call("monodromy", "--m", "3", "--n", "3", "--r", "2", "--format", "json")
    assert code == 0
    assert out.strip() == '{"eigenvalues":["0/1","1/2"]}'


def test_check_grid():
    code, out, _ = call("check", "monodromy", "--max", "4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 21
    assert all("PASS" in line for line in lines)
    assert lines[-1] == "overall: PASS"


def test_check_holomorphy_json():
    code, out, _ = call("check", "holomorphy", "--m", "3", "--n", "3", "--r", "2", "--d", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "PASS"
    assert len(doc["results"][0]["checks"]) == 4


def test_orbit_class_text_and_round_trip():
    code, out, _ = call("orbit-class", "--m", "2", "--n", "2", "--level", "1", "--lambda", "0,1")
    assert code == 0 and out == "L^3*(L-1)^2*(L+1)^2\n"
    code, out, _ = call("orbit-class", "--m", "2", "--n", "2", "--level", "1", "--lambda", "0,1", "--format", "json")
    doc = json.loads(out)
    assert lclass_from_json(doc["class"]) == class_orbit(2, 2, OrbitIndex((0, 1), 1))


def test_oracle_csv():
    code, out, _ = call("oracle", "--m", "2", "--n", "2", "--level", "0", "--q", "2", "--format", "csv")
    assert code == 0
    rows = out.splitlines()[1:]
    assert len(rows) == 3
    assert sum(int(row.rsplit(",", 1)[1]) for row in rows) == 16


def test_oracle_verify():
    code, out, _ = call("oracle", "--m", "2", "--n", "2", "--level", "1", "--q", "2", "--lambda", "0,1")
    assert code == 0 and out.endswith("PASS\n")


def test_strata_json_round_trip():
    code, out, _ = call("strata", "--m", "2", "--n", "2", "--r", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    for entry in doc["strata"]:
        assert set(entry) == {"J", "class", "euler", "level"}
        assert lclass_from_json(entry["class"]) == stratum_class(2, 2, 2, entry["J"]).value
    assert [e["euler"] for e in doc["strata"]] == [0, 0, 0, 4]


def test_motivic_series():
    code, out, _ = call("motivic", "--m", "2", "--n", "2", "--r", "2", "--order", "3")
    assert code == 0
    assert "series agrees with strata form: PASS" in out


def test_twisted():
    code, out, _ = call("twisted", "--m", "3", "--n", "3", "--r", "2", "--d", "2")
    assert code == 0 and out == "Z_top^(2)(s) = 0\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["zeta", "--m", "3"],
        ["zeta", "--m", "3", "--n", "2", "--r", "1"],
        ["nonsense"],
        [],
        ["zeta", "--m", "3", "--n", "3", "--r", "2", "--frobnicate"],
        ["zeta", "--m", "x", "--n", "3", "--r", "2"],
        ["oracle", "--m", "2", "--n", "2", "--q", "4"],
        ["monodromy", "--m", "3", "--n", "3", "--r", "2", "--rank", "0"],
        ["zeta", "--m", "3", "--n", "3", "--r", "2", "--format", "csv"],
    ],
)
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_budget_error_exit_code(monkeypatch):
    monkeypatch.setenv("DETZETA_BUDGET", "1000")
    code, _, err = call("oracle", "--m", "2", "--n", "2", "--level", "1", "--q", "3")
    assert code == 3 and "budget" in err.lower()


def test_level_error_exit_code():
    code, _, _ = call("strata", "--m", "2", "--n", "2", "--r", "2", "--level", "1")
    assert code == 3


def test_determinism():
    argv = ["oracle", "--m", "2", "--n", "2", "--level", "1", "--q", "3", "--format", "json"]
    first = call(*argv)[1]
    assert call(*argv)[1] == first
    assert call(*argv, "--jobs", "2")[1] == first


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "detzeta.cli", "zeta", "--m", "1", "--n", "1", "--r", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "Z_top(s) = 1/(1+s)\n"
