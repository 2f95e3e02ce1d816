from __future__ import annotations

import json
import subprocess
import sys

import pytest

from taftquiver.cli import run
from taftquiver.config import spec_text


@pytest.fixture
def s3_config(tmp_path, s3):
    path = tmp_path / "s3.json"
    path.write_text(spec_text(s3))
    return str(path)


def test_verify_passes(s3_config, capsys):
    assert run(["verify", "--config", s3_config, "--max-degree", "6"]) == 0
    out = capsys.readouterr().out
    assert "PASS  x^r" in out and "FAIL" not in out


def test_verify_fails_with_exit_one(tmp_path, s3, capsys):
    data = json.loads(spec_text(s3))
    data["gamma"] = [1, 1, 1]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    out_path = tmp_path / "report.json"
    assert run(["verify", "--config", str(path), "--max-degree", "2", "--out", str(out_path)]) == 1
    report = json.loads(out_path.read_text())
    assert not report["passed"]
    assert any(e["name"] == "vertact.gamma" and not e["passed"] for e in report["report"]["entries"])


def test_usage_errors_exit_two(tmp_path, s3, capsys):
    data = json.loads(spec_text(s3))
    data["m"] = 4
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    assert run(["verify", "--config", str(path)]) == 2
    assert "field 'm'" in capsys.readouterr().err
    assert run(["frobnicate"]) == 2
    assert run(["enumerate", "--n", "3", "--r", "3", "--m", "4"]) == 2
    assert run(["enumerate", "--n", "3", "--r", "3", "--m", "3", "--budget", "5"]) == 2
    assert run(["center", "--n", "0"]) == 2


def test_center(capsys, tmp_path):
    out = tmp_path / "c.json"
    assert run(["center", "--n", "3", "--max-degree", "3", "--out", str(out)]) == 0
    assert "dims: [1, 0, 1, 2]" in capsys.readouterr().out
    assert json.loads(out.read_text())["dims"] == [1, 0, 1, 2]


def test_classify_and_invariants(s3_config, capsys):
    assert run(["classify", "--config", s3_config]) == 0
    assert run(["invariants", "--config", s3_config, "--max-degree", "4"]) == 0
    out = capsys.readouterr().out
    assert "degree 3: dim 2" in out


def test_invariants_outside_hypothesis(tmp_path, r3, capsys):
    path = tmp_path / "r3.json"
    path.write_text(spec_text(r3))
    assert run(["invariants", "--config", str(path), "--max-degree", "2"]) == 0
    assert "no closed-form claims" in capsys.readouterr().out


def test_enumerate_small(tmp_path, capsys):
    out = tmp_path / "e.json"
    args = ["enumerate", "--n", "3", "--r", "2", "--m", "2", "--kind", "reflection", "--out", str(out)]
    assert run(args) == 0
    payload = json.loads(out.read_text())
    assert payload["actions"] and not payload["violations"]


def test_reports_are_byte_stable(s3_config, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for target in (a, b):
        assert run(["verify", "--config", s3_config, "--max-degree", "3", "--out", str(target), "--seed", "5"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point(s3_config):
    proc = subprocess.run(
        [sys.executable, "-m", "taftquiver", "center", "--n", "3", "--max-degree", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "dims: [1, 0, 1]" in proc.stdout
