import json
import subprocess
import sys

import pytest

from gausslie.cli import main, parse_complex, run


def run_json(capsys, *argv):
    code, _ = run([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.mark.parametrize("argv", [
    ["rootsys", "F4"],
    ["lattice", "D4"],
    ["lattice", "SU(6)/Z2"],
    ["gauss", "compute", "E6"],
    ["gauss", "verify-reciprocity", "SU(6)/Z2"],
    ["gauss", "verify-identity", "E7"],
    ["gauss", "table", "--max-rank", "6"],
    ["gauss", "qr", "3", "5"],
    ["gauss", "supq", "3", "5"],
    ["gauss", "milgram", "A2"],
    ["modular", "verify", "A2"],
    ["modular", "show-S", "A1"],
    ["modular", "show-T", "E8"],
    ["modular", "s-dual", "SU(4)/Z2"],
    ["hecke", "verify", "G2"],
    ["hecke", "show", "B2", "--which", "T"],
    ["hecke", "s-dual", "Sp(2)"],
    ["hecke", "table", "--max-rank", "4"],
    ["theta", "eval", "A1", "--tau", "i"],
    ["theta", "eval", "--form", "SU(3)", "--tau", "0.3+0.9i"],
    ["theta", "verify-modular", "A2", "--tau", "0.2+1.1i"],
    ["theta", "verify-sdual", "Sp(2)", "--tau", "0.4+1.2i"],
    ["theta", "t-phases", "B2"],
    ["theta", "landsberg", "SU(2)", "--eps", "0.05"],
])
def test_commands_succeed_with_json(capsys, argv):
    code, data = run_json(capsys, *argv)
    assert code == 0
    assert data["pass"] is True


def test_e8_identity_text(capsys):
    assert main(["gauss", "verify-identity", "E8"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_theta_eval_value(capsys):
    code, data = run_json(capsys, "theta", "eval", "A1", "--tau", "i", "--tol", "1e-10")
    re, im = data["result"]["value"]
    assert code == 0 and abs(re - 1.00373) < 1e-5 and abs(im) < 1e-12


@pytest.mark.parametrize("argv", [
    ["gauss", "compute", "Foo(3)"],
    ["gauss", "verify-identity", "E9"],
    ["gauss", "qr", "3", "9"],
    ["theta", "eval", "A1", "--tau", "1-1i"],
    ["theta", "eval", "A1", "--tau", "abc"],
    ["theta", "eval"],
    ["modular", "verify", "B2"],
    ["hecke", "verify", "A2"],
    ["nonsense"],
    ["sweep", "all", "--max-rank", "0"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_verification_failure_exits_1(capsys):
    # a loose tail target makes the S-law residual exceed the 1e-8 threshold
    code = main(["theta", "verify-modular", "A2", "--tol", "1e-1", "--tau", "0.1+0.3i"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL" in out and "lhs =" in out and "rhs =" in out


def test_config_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"taus": [[0.0, 1.2]], "seed": 3}))
    code, data = run_json(capsys, "theta", "t-phases", "A2", "--config", str(cfg))
    assert code == 0 and data["pass"]


def test_parse_complex():
    assert parse_complex("i") == 1j
    assert parse_complex("0.3+0.9i") == 0.3 + 0.9j
    assert parse_complex("-2i") == -2j


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gausslie", "gauss", "compute", "E8", "--format", "json"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pass"] is True


def test_sweep_small(capsys):
    assert main(["sweep", "all", "--max-rank", "2"]) == 0
    out = capsys.readouterr().out
    assert out.count("[PASS]") == 11
