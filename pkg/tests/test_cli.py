from __future__ import annotations

import json
import subprocess
import sys

import pytest

from capelli.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEig:
    def test_capelli_example(self, capsys):
        code, out, _ = run(capsys, "eig", "--spec", "H:2", "--mu", "3,2", "--n", "3")
        data = json.loads(out)
        assert code == 0
        assert data["value"] == "12"
        assert data["agree"] is True
        assert data["routes"] == {"action": "12", "closed": "12", "strips": "12", "gamma": "12"}

    def test_schur_example(self, capsys):
        code, out, _ = run(capsys, "eig", "--spec", "S:2,1", "--mu", "2,1", "--n", "2")
        assert code == 0 and json.loads(out)["value"] == "3"

    def test_empty_module(self, capsys):
        _, out, _ = run(capsys, "eig", "--spec", "1", "--mu", "", "--n", "2")
        assert json.loads(out)["value"] == "1"
        _, out, _ = run(capsys, "eig", "--spec", "H:1", "--mu", "", "--n", "2")
        assert json.loads(out)["value"] == "0"

    def test_rational_output(self, capsys):
        _, out, _ = run(capsys, "eig", "--spec", "K:2,1", "--mu", "2,1", "--n", "2")
        assert json.loads(out)["value"] == "-3"

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "eig", "--spec", "I:2", "--mu", "2,2,1", "--n", "3", "--format", "csv")
        assert code == 0
        header, row = out.strip().splitlines()
        assert header == "spec,mu,n,value,agree,route_action,route_closed,route_strips"
        assert row == 'I:2,"2,2,1",3,12,True,12,12,12'

    @pytest.mark.parametrize(
        "argv",
        [
            ["eig", "--spec", "Q:1", "--mu", "1"],
            ["eig", "--spec", "H:1", "--mu", "1,2"],
            ["eig", "--spec", "H:1", "--mu", "4", "--n", "3"],
        ],
    )
    def test_errors(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2 and err.startswith("capelli: error:")


class TestGuards:
    def test_cells(self, capsys):
        code, out, _ = run(capsys, "eig", "--spec", "H:1", "--mu", "1", "--n", "7", "--force")
        assert code == 0 and json.loads(out)["value"] == "1"
        code, _, err = run(capsys, "eig", "--spec", "H:1", "--mu", "5,4,4", "--n", "5")
        assert code == 2 and "13 cells" in err

    def test_rank(self, capsys):
        code, _, err = run(capsys, "eig", "--spec", "H:1", "--mu", "1", "--n", "7")
        assert code == 2 and "n=7" in err

    def test_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("CAPELLI_MAX_CELLS", "2")
        code, _, err = run(capsys, "eig", "--spec", "H:1", "--mu", "2,1", "--n", "2")
        assert code == 2 and "limit of 2" in err
        monkeypatch.setenv("CAPELLI_MAX_CELLS", "13")
        code, out, _ = run(capsys, "eig", "--spec", "H:1", "--mu", "1,1,1,1,1,1,1,1,1,1,1,1,1", "--n", "1")
        assert code == 0 and json.loads(out)["value"] == "13"


class TestChi:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "chi", "--spec", "I:2", "--n", "2")
        data = json.loads(out)
        assert code == 0
        assert data["text"] == "x1^2 + x1*x2 + x2^2 - x1 - 2*x2"
        assert data["terms"][0] == {"exponents": [2, 0], "coeff": "1"}

    def test_csv(self, capsys):
        _, out, _ = run(capsys, "chi", "--spec", "H:1", "--n", "2", "--format", "csv")
        assert out.strip().splitlines() == ["x1,x2,coeff", "1,0,1", "0,1,1"]


class TestStrips:
    def test_horizontal(self, capsys):
        _, out, _ = run(capsys, "strips", "--mu", "3,2", "--k", "2")
        data = json.loads(out)
        assert data["count"] == 8 and data["total"] == "12"
        assert sorted(s["factor"] for s in data["strips"]) == ["1"] * 4 + ["2"] * 4

    def test_vertical_csv(self, capsys):
        _, out, _ = run(capsys, "strips", "--mu", "1,1", "--k", "2", "--kind", "vertical", "--format", "csv")
        assert out.strip().splitlines() == ["cells,factor", '"1,1 2,1",2']


class TestVerify:
    @pytest.mark.parametrize(
        "argv",
        [
            ["--suite", "wilf", "--n", "3"],
            ["--suite", "duality", "--n", "4", "--max-weight", "6"],
            ["--suite", "zeta2-identity"],
        ],
    )
    def test_passing(self, capsys, argv):
        code, out, _ = run(capsys, "verify", *argv)
        report = json.loads(out)[0]
        assert code == 0 and report["passed"] and report["failures"] == []

    def test_unknown_suite(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", "--suite", "nope"])


class TestTable:
    def test_csv(self, capsys):
        _, out, _ = run(capsys, "table", "--spec", "H:1", "--spec", "I:2", "--n", "2", "--max-weight", "2", "--format", "csv")
        assert out.strip().splitlines() == [
            "mu,weight,H:1,I:2",
            ',"0,0",0,0',
            '1,"1,0",1,0',
            '2,"1,1",2,0',
            '"1,1","2,0",2,2',
        ]


def test_deterministic_and_module_entry():
    argv = [sys.executable, "-m", "capelli", "chi", "--spec", "J:2,1", "--n", "2"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["text"].startswith("x1^3 + 2*x1^2*x2")
