import subprocess
import sys
from dataclasses import FrozenInstanceError
from pathlib import Path

import pytest

from commuting_magic.config import ReproConfig, VerifyConfig

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def test_config_defaults_are_frozen():
    cfg = ReproConfig()
    assert cfg.verify == VerifyConfig() and cfg.verify.tol == 1e-9 and cfg.verify.max_sweeps == 100
    with pytest.raises(FrozenInstanceError):
        cfg.verify.tol = 1.0


def test_reproduce_examples_runs_clean(tmp_path):
    res = subprocess.run(
        [sys.executable, str(SCRIPTS / "reproduce_examples.py"), "--out-dir", str(tmp_path)],
        capture_output=True, text=True,
    )
    assert res.returncode == 0, res.stdout + res.stderr
    assert "0 failure(s)" in res.stdout
    assert (tmp_path / "M16_MA.txt").exists()


def test_singular_value_audit_picks_the_compounded_values():
    res = subprocess.run([sys.executable, str(SCRIPTS / "singular_value_audit.py")], capture_output=True, text=True)
    assert res.returncode == 0
    lines = {ln.split()[0]: ln for ln in res.stdout.splitlines()}
    assert lines["compounded"].endswith("MATCH")
    assert lines["B-only"].endswith("no")
