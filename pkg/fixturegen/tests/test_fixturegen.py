"""End-to-end checks: generated FCIDUMP files must load cleanly in the
consumer tool and the sidecar energies must be reproducible from the file
contents alone (consumed only through the ``kadapt`` command line)."""

import json
import re
import subprocess
import sys

import pytest
from click.testing import CliRunner

from fixturegen.cli import main, parse_grid
from fixturegen.fcidump import generate_fixture


@pytest.fixture(scope="module")
def h2_fixture(tmp_path_factory):
    out = tmp_path_factory.mktemp("fixtures")
    runner = CliRunner()
    result = runner.invoke(main, ["h2", "--grid", "0.74", "--out", str(out)])
    assert result.exit_code == 0, result.output
    return out


def kadapt(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "kadapt.cli", *args],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


class TestGridParsing:
    def test_single_value(self):
        assert parse_grid("0.74") == [0.74]

    def test_range_inclusive(self):
        assert parse_grid("1.0:1.4:0.2") == [1.0, 1.2, 1.4]


class TestGeneratedArtifacts:
    def test_files_written(self, h2_fixture):
        assert (h2_fixture / "h2_0.74.fcidump").exists()
        assert (h2_fixture / "h2_0.74.json").exists()

    def test_sidecar_contents(self, h2_fixture):
        meta = json.loads((h2_fixture / "h2_0.74.json").read_text())
        assert meta["scf_converged"] is True
        assert meta["n_electrons"] == 2
        assert meta["n_qubits"] == 4
        assert meta["bond_length_angstrom"] == 0.74
        assert meta["fci_energy"] < meta["hf_energy"]

    def test_consumer_parses_fixture(self, h2_fixture):
        info = json.loads(kadapt("pool-info", "--fcidump",
                                 str(h2_fixture / "h2_0.74.fcidump")))
        assert info["n_qubits"] == 4
        assert info["pool_size"] == 1


class TestEnergyAgreement:
    def test_sidecar_energies_reproduced_from_file(self, h2_fixture):
        """HF and FCI recomputed by the consumer from the FCIDUMP alone
        must match the generator's sidecar values."""
        meta = json.loads((h2_fixture / "h2_0.74.json").read_text())
        out = kadapt("fci", "--fcidump", str(h2_fixture / "h2_0.74.fcidump"))
        hf = float(re.search(r"hf_energy\s*:\s*(\S+)", out).group(1))
        fci = float(re.search(r"fci_energy\s*:\s*(\S+)", out).group(1))
        assert hf == pytest.approx(meta["hf_energy"], abs=1e-8)
        assert fci == pytest.approx(meta["fci_energy"], abs=1e-6)

    def test_end_to_end_run_reaches_fci(self, h2_fixture, tmp_path):
        out_dir = tmp_path / "run"
        kadapt("run", "--fcidump", str(h2_fixture / "h2_0.74.fcidump"),
               "--out", str(out_dir), "--no-plots")
        payload = json.loads((out_dir / "run.json").read_text())
        assert abs(payload["error_vs_fci"]) < 1e-6


class TestLargerMolecule:
    def test_lih_generation_and_fci(self, tmp_path):
        path = generate_fixture("lih", 1.6, tmp_path)
        meta = json.loads((tmp_path / "lih_1.60.json").read_text())
        assert meta["n_qubits"] == 12
        out = kadapt("fci", "--fcidump", str(path))
        fci = float(re.search(r"fci_energy\s*:\s*(\S+)", out).group(1))
        assert fci == pytest.approx(meta["fci_energy"], abs=1e-6)
