"""Session fixtures: reference sweep CSVs generated through the CLI."""

import subprocess
import sys

import pytest


def run_sweep(out, bound_set, gamma_steps, n_list, jobs=4):
    cmd = [sys.executable, "-m", "gadcap.cli", "sweep", "--set", bound_set,
           "--gamma-min", "0", "--gamma-max", "1",
           "--gamma-steps", str(gamma_steps), "--n-list", n_list,
           "--jobs", str(jobs), "--out", str(out)]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return out


@pytest.fixture(scope="session")
def csv_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("sweeps")


@pytest.fixture(scope="session")
def classical_csv(csv_dir):
    return run_sweep(csv_dir / "classical.csv", "classical", 11,
                     "0.1,0.3,0.5")


@pytest.fixture(scope="session")
def quantum_csv(csv_dir):
    return run_sweep(csv_dir / "quantum.csv", "quantum", 11, "0.1,0.3,0.5")


@pytest.fixture(scope="session")
def twoway_csv(csv_dir):
    return run_sweep(csv_dir / "twoway.csv", "twoway", 11, "0.1,0.3,0.5")


@pytest.fixture(scope="session")
def region_csv(csv_dir):
    n_list = ",".join(f"{0.1 * k:.1f}" for k in range(11))
    return run_sweep(csv_dir / "region.csv", "twoway", 21, n_list)
