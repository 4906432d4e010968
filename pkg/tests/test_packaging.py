"""Wheel build sanity: the accelerator and its fallback both ship."""

import subprocess
import sys
import zipfile
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent


@pytest.mark.skipif(not (ROOT / "setup.py").exists(),
                    reason="not running from a source tree")
def test_wheel_contains_backend_pair(tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "pip", "wheel", "--no-build-isolation",
         "--no-deps", "-w", str(tmp_path), str(ROOT)],
        capture_output=True, text=True, check=False)
    assert result.returncode == 0, result.stderr[-2000:]
    wheels = list(tmp_path.glob("theta_kernel-*.whl"))
    assert len(wheels) == 1
    names = zipfile.ZipFile(wheels[0]).namelist()
    assert "theta_kernel/_boxscan_py.py" in names
    assert "theta_kernel/verify.py" in names
    # compiled core is expected on a machine with a C toolchain
    assert any(n.startswith("theta_kernel/_boxscan.") and n.endswith(".so")
               for n in names), names
