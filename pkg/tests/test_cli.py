import json
import subprocess
import sys
from dataclasses import replace
from fractions import Fraction

import pytest

from rbmoments import cli
from rbmoments.catalog import get_entry
from rbmoments.racah import RacahParams


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def plain_default(monkeypatch):
    monkeypatch.delenv("RB_DEFAULT_FORMAT", raising=False)


class TestSeq:
    def test_plain(self, capsys):
        assert run(capsys, "seq", "--kind", "rplus", "--count", "4")[:2] == (0, "1, 1/3, 1/30, -1/105\n")
        assert run(capsys, "seq", "--kind", "rminus", "--count", "1")[:2] == (0, "1\n")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "seq", "--kind", "rplus", "--count", "10", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["command"] == "seq" and doc["values"][-1] == "-140051/969969"
        assert set(doc) == {"command", "inputs", "values", "report"}

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "seq", "--kind", "rminus", "--count", "3", "--format", "csv")
        assert out == "n,value\n0,1\n1,-1/6\n2,1/30\n"

    def test_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("RB_DEFAULT_FORMAT", "json")
        _, out, _ = run(capsys, "seq", "--count", "2")
        assert json.loads(out)["values"] == ["1", "1/3"]

    def test_decimal_digits(self, capsys):
        _, out, _ = run(capsys, "seq", "--count", "2", "--decimal-digits", "5")
        assert out == "1, 0.33333\n"
        _, out, _ = run(capsys, "seq", "--count", "2", "--decimal-digits", "5", "--format", "json")
        assert json.loads(out)["values"] == ["1", "1/3"]

    @pytest.mark.parametrize("argv", [["seq", "--count", "-1"], ["seq", "--kind", "zero"], ["nope"], []])
    def test_bad_arguments(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2


class TestVerify:
    def test_all(self, capsys):
        code, out, _ = run(capsys, "verify", "--theorem", "all", "--depth", "20")
        assert code == 0
        assert out.count(": ok") == 5

    def test_depth_one(self, capsys):
        assert run(capsys, "verify", "--theorem", "1", "--depth", "1")[0] == 0

    def test_list_and_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--theorem", "2,T4", "--depth", "6", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert [v["theorem"] for v in doc["values"]] == ["T2", "T4"]
        assert doc["report"]["T4"]["rows"][5]["residue"] == "0"

    def test_target_kind(self, capsys):
        assert run(capsys, "verify", "--theorem", "5", "--depth", "8", "--target-kind", "rminus")[0] == 0
        assert run(capsys, "verify", "--theorem", "3", "--depth", "8", "--target-kind", "rminus")[0] == 1

    def test_corrupted_catalog(self, capsys, monkeypatch):
        good = get_entry("T1")
        bad_spec = replace(good.spec, params=RacahParams(0, Fraction(-1, 2), 0, Fraction(1, 7)))
        bad = replace(good, spec=bad_spec)
        monkeypatch.setattr(cli, "get_entry", lambda key: bad)
        code, out, _ = run(capsys, "verify", "--theorem", "1", "--depth", "20")
        assert code == 1
        assert "FAIL at n = 1" in out

    def test_csv_rows(self, capsys):
        _, out, _ = run(capsys, "verify", "--theorem", "1", "--depth", "3", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "theorem,n,favard,psi,target,residue"
        assert lines[2] == "T1,1,-1/3,-1/3,-1/3,0"

    def test_unknown_theorem(self, capsys):
        assert run(capsys, "verify", "--theorem", "9")[0] == 2

    def test_depth_zero(self, capsys):
        assert run(capsys, "verify", "--depth", "0")[0] == 2


class TestFamilies:
    def test_moments(self, capsys):
        assert run(capsys, "moments", "--params", "0,-1/2,0,0", "--count", "3")[:2] == (0, "1, -1/3, 2/15\n")

    def test_moments_from_theorem(self, capsys):
        _, out, _ = run(capsys, "moments", "--theorem", "5", "--count", "2")
        assert out == "1, -1\n"  # 2 R+_4 / R+_3 = 2 (1/210) / (-1/105)

    def test_hankel(self, capsys):
        assert run(capsys, "hankel", "--params", "0,-1/2,0,0", "--size", "1")[:2] == (0, "1\n")
        assert run(capsys, "hankel", "--params", "0,-1/2,0,0", "--size", "2")[1] == "1, 1/45\n"

    def test_jacobi(self, capsys):
        code, out, _ = run(capsys, "jacobi", "--params", "0,-1/2,0,0", "--count", "2", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "k,b,lam"
        assert lines[1].split(",")[1] == "-1/3"
        _, out, _ = run(capsys, "jacobi", "--params", "0,-1/2,0,0", "--count", "2")
        assert "-1/3" in out.splitlines()[1]

    def test_inadmissible(self, capsys):
        code, _, err = run(capsys, "moments", "--params=-1,0,0,0", "--count", "3")
        assert code == 3
        assert "(alpha+1)_k" in err

    def test_both_sources(self, capsys):
        assert run(capsys, "moments", "--params", "0,0,0,0", "--theorem", "1")[0] == 2

    def test_missing_source(self, capsys):
        assert run(capsys, "hankel", "--size", "2")[0] == 2

    def test_bad_params(self, capsys):
        assert run(capsys, "moments", "--params", "0,1/2")[0] == 2


class TestL:
    def test_lvalue(self, capsys):
        assert run(capsys, "lvalue", "--n", "1")[:2] == (0, "-1/3\n")
        assert run(capsys, "lvalue", "--n", "2")[:2] == (0, "-1/60\n")
        assert run(capsys, "lvalue", "--n", "2", "--poly", "1,1")[1] == "-1/12\n"

    def test_lvalue_domain(self, capsys):
        assert run(capsys, "lvalue", "--n", "0")[0] == 2
        assert run(capsys, "lvalue", "--n", "1", "--poly", "0,1")[0] == 2

    def test_leval_matches_ldirect(self, capsys):
        code, out, _ = run(capsys, "leval", "--s-re", "2", "--tol", "1e-10", "--format", "json")
        assert code == 0
        a = json.loads(out)["values"][0]
        code, out, _ = run(capsys, "ldirect", "--s-re", "2", "--terms", "1000000", "--format", "json")
        b = json.loads(out)["values"][0]
        assert abs(complex(a["re"], a["im"]) - complex(b["re"], b["im"])) < 1e-8

    @pytest.mark.parametrize("argv", [["leval", "--s-re", "1"], ["leval", "--s-re", "0.5"], ["ldirect", "--s-re", "1"]])
    def test_domain(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2 and "error" in err

    def test_leval_not_converged(self, capsys):
        code, out, err = run(capsys, "leval", "--s-re", "0.6", "--max-terms", "2000")
        assert code == 1 and "warning" in err and out

    def test_leval_csv(self, capsys):
        _, out, _ = run(capsys, "leval", "--s-re", "3", "--s-im", "1", "--format", "csv")
        assert out.splitlines()[0] == "re,im,error,terms"


def test_catalog_command(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and [e["id"] for e in doc["values"]] == ["T1", "T2", "T3", "T4", "T5"]
    assert doc["values"][4]["shift"] == "-2"
    assert run(capsys, "catalog")[1].count("\n") == 5


def test_psi_and_ushift(capsys):
    assert run(capsys, "psi", "--poly", "0,0,1")[1] == "1/6\n"
    code, out, _ = run(capsys, "ushift", "--u", "1/2", "--depth", "8")
    assert code == 0 and "shift -1/4" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["seq", "--count", "12"],
        ["verify", "--theorem", "all", "--depth", "5"],
        ["moments", "--theorem", "3", "--count", "6"],
        ["jacobi", "--theorem", "4", "--count", "4"],
        ["hankel", "--theorem", "2", "--size", "4"],
        ["lvalue", "--n", "7"],
        ["catalog"],
        ["ushift", "--u", "3/7", "--depth", "5"],
        ["psi", "--poly", "1,3/2,1/2"],
    ],
)
def test_json_roundtrip(capsys, argv):
    _, out, _ = run(capsys, *argv, "--format", "json")
    assert cli.dump_json(json.loads(out)) == out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rbmoments", "seq", "--count", "3"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout == "1, 1/3, 1/30\n"
