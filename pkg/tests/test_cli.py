from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from bspoisson.cli import main
from bspoisson.poly import Polynomial

GOLDEN = Path(__file__).parent / "golden"

CASES = [
    ("a2_121_100.txt", ["--type", "A2", "--word", "1,2,1", "--gamma", "100"]),
    ("a2_121_111.txt", ["--type", "A2", "--word", "1,2,1", "--gamma", "111", "--reference", "--checks", "jacobi,homogeneity"]),
    ("g2_full.txt", ["--type", "G2", "--word", "1,2,1,2,1,2", "--gamma", "full", "--checks", "jacobi,cgl"]),
    ("g2_110010.txt", ["--type", "G2", "--word", "1,2,1,2,1,2", "--gamma", "110010"]),
    ("a1_11111.txt", ["--type", "A1", "--word", "1,1,1,1,1", "--gamma", "11111"]),
    ("a1_10001.txt", ["--type", "A1", "--word", "1,1,1,1,1", "--gamma", "10001"]),
    ("a2_121_100.json", ["--type", "A2", "--word", "1,2,1", "--gamma", "100", "--format", "json", "--mod", "2", "--checks", "jacobi"]),
]


@pytest.mark.parametrize("name,argv", CASES, ids=[c[0] for c in CASES])
def test_golden_outputs(name, argv, capsys):
    assert main(argv) == 0
    assert capsys.readouterr().out == (GOLDEN / name).read_text()


@pytest.mark.parametrize("name,argv", CASES[:2], ids=[c[0] for c in CASES[:2]])
def test_golden_flag(name, argv, capsys):
    assert main(argv + ["--golden", str(GOLDEN / name)]) == 0
    capsys.readouterr()


def test_golden_flag_mismatch(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("nope\n")
    assert main(CASES[0][1] + ["--golden", str(bad)]) == 1
    assert "golden mismatch" in capsys.readouterr().err


def test_sl3_text_lines(capsys):
    main(["--type", "A2", "--word", "1,2,1", "--gamma", "full", "--reference"])
    out = capsys.readouterr().out
    assert "{z_1,z_3} = z_1 z_3 - 2 z_2\n" in out
    assert "note: printed {z_1,z_3} = z_1 z_3 - 2 differs" in out


def test_json_schema_and_roundtrip(capsys):
    main(["--type", "G2", "--word", "1,2,1,2,1,2", "--gamma", "110010", "--format", "json", "--checks", "jacobi,ore"])
    doc = json.loads(capsys.readouterr().out)
    assert list(doc) == ["type", "word", "gamma", "normalization", "weights", "h", "brackets", "checks"]
    assert doc["normalization"] == "short_root_norm_2"
    assert len(doc["brackets"]) == 15
    e = next(b for b in doc["brackets"] if (b["i"], b["k"]) == (2, 6))
    p = Polynomial.from_json(6, e["terms"])
    assert p.to_json() == e["terms"]
    assert str(p) == "3 z_2 z_6 - 6 z_4 z_6 + 6 z_5^3 z_6^2"
    assert e["c_quadratic"] == 3
    assert all(isinstance(x, str) for row in doc["h"] for x in row)
    assert doc["checks"]["jacobi"] == {"check": "jacobi", "status": "pass"}


def test_all_charts(capsys):
    assert main(["--type", "A1", "--word", "1,1,1,1,1", "--gamma", "all", "--checks", "jacobi"]) == 0
    out = capsys.readouterr().out
    headers = [line for line in out.splitlines() if line.startswith("# ")]
    assert len(headers) == 32
    assert headers[0].endswith("gamma=00000") and headers[-1].endswith("gamma=11111")
    assert main(["--type", "A1", "--word", "1,1", "--gamma", "all", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [d["gamma"] for d in doc] == ["00", "01", "10", "11"]


def test_output_is_deterministic_across_workers(capsys):
    argv = ["--type", "A2", "--word", "1,2,1,2", "--gamma", "all", "--checks", "jacobi,ore", "--format", "json"]
    main(argv + ["--workers", "1"])
    one = capsys.readouterr().out
    main(argv + ["--workers", "2"])
    assert capsys.readouterr().out == one


def test_trivial_gamma_and_engine(capsys):
    assert main(["--type", "B2", "--word", "1,2,1", "--gamma", "trivial", "--checks", "logcanonical", "--engine", "recursive"]) == 0
    out = capsys.readouterr().out
    assert "gamma=000" in out and "check logcanonical: pass" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["--type", "X2", "--word", "1"],
        ["--type", "A2", "--word", "1,3"],
        ["--type", "A2", "--word", "1,2", "--gamma", "1"],
        ["--type", "A2", "--word", "1,2", "--gamma", "12"],
        ["--type", "A2", "--word", "1,2", "--checks", "bogus"],
        ["--type", "A2", "--word", "1,2", "--mod", "4"],
        ["--type", "A2", "--word", ""],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["--word", "1"])
    assert exc.value.code == 2


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "bspoisson", "--type", "A2", "--word", "1,2,1", "--gamma", "100"],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0
    assert r.stdout == (GOLDEN / "a2_121_100.txt").read_text()


def test_failed_check_exit_1(monkeypatch, capsys):
    from bspoisson import cli
    from bspoisson.verify import VerificationReport

    def broken(st, t, checks):
        return [VerificationReport({}, "jacobi", "fail", {"triple": [1, 2, 3]})]

    monkeypatch.setattr(cli, "run_checks", broken)
    assert main(["--type", "A2", "--word", "1,2,1", "--checks", "jacobi"]) == 1
    assert 'check jacobi: fail {"triple": [1, 2, 3]}' in capsys.readouterr().out
