import numpy as np
import pytest

from kadapt.fci import (
    NonHermitianError,
    SpectrumRequest,
    _dense_eigenvalues,
    _lanczos_eigenvalues,
    exact_eigenvalues,
    exact_ground_energy,
    sector_basis,
)
from kadapt.pauli import PauliSum, PauliTerm

from conftest import load_hamiltonian, load_integrals, load_sidecar


class TestSectorBasis:
    def test_counts_match_binomials(self):
        from math import comb

        # 6 qubits interleaved: 3 up slots, 3 down slots; (4 electrons, sz 0)
        basis = sector_basis(6, 4, 0.0)
        assert len(basis) == comb(3, 2) * comb(3, 2)

    def test_members_have_right_occupation(self):
        for state in sector_basis(8, 4, 1.0):
            ups = sum(1 for q in range(0, 8, 2) if state >> q & 1)
            downs = sum(1 for q in range(1, 8, 2) if state >> q & 1)
            assert ups + downs == 4
            assert ups - downs == 2


class TestExactEnergies:
    def test_single_z(self):
        h = PauliSum(1, [PauliTerm(1, 0, 1, 1.0)])
        assert exact_ground_energy(SpectrumRequest(h)) == pytest.approx(-1.0)

    def test_h2_value(self):
        h = load_hamiltonian("h2_0.74")
        e = exact_ground_energy(SpectrumRequest(h))
        assert e == pytest.approx(-1.1372837643486, abs=1e-9)

    def test_non_hermitian_rejected(self):
        h = PauliSum(1, [PauliTerm(1, 1, 0, 1j)])
        with pytest.raises(NonHermitianError):
            exact_ground_energy(SpectrumRequest(h))

    def test_sector_restriction_is_variational(self):
        h = load_hamiltonian("lih_1.60")
        m = load_integrals("lih_1.60")
        sector = exact_ground_energy(SpectrumRequest(h, sector=(m.n_electrons, 0.0)))
        unrestricted = exact_ground_energy(SpectrumRequest(h))
        assert sector >= unrestricted - 1e-9
        # for these molecules the global ground state lies in the HF sector
        assert sector == pytest.approx(unrestricted, abs=1e-8)

    @pytest.mark.parametrize("stem", ["h2_0.74", "lih_1.60", "beh2_1.30"])
    def test_matches_independent_reference(self, stem):
        h = load_hamiltonian(stem)
        m = load_integrals(stem)
        e = exact_ground_energy(SpectrumRequest(h, sector=(m.n_electrons, m.ms2 / 2)))
        assert e == pytest.approx(load_sidecar(stem)["fci_energy"], abs=1e-8)

    def test_dense_and_lanczos_agree(self):
        h = load_hamiltonian("h2_0.74")
        basis = sector_basis(4, 2, 0.0)
        dense = _dense_eigenvalues(h, basis, 1)[0]
        lanczos = _lanczos_eigenvalues(h, basis, 1)[0]
        assert lanczos == pytest.approx(dense, abs=1e-8)

    def test_lanczos_full_space_agrees_with_dense(self):
        h = load_hamiltonian("h2_0.74")
        full = np.arange(16, dtype=np.int64)
        dense = _dense_eigenvalues(h, full, 2)
        lanczos = _lanczos_eigenvalues(h, None, 2)
        assert np.allclose(dense, lanczos, atol=1e-8)

    def test_multiple_eigenvalues_sorted(self):
        h = load_hamiltonian("h2_0.74")
        vals = exact_eigenvalues(SpectrumRequest(h, n_eigenvalues=4))
        assert list(vals) == sorted(vals)

    def test_qubit_guard(self):
        h = PauliSum(25, [PauliTerm(25, 0, 1, 1.0)])
        with pytest.raises(ValueError, match="refusing"):
            exact_ground_energy(SpectrumRequest(h))

    def test_empty_sector_rejected(self):
        h = load_hamiltonian("h2_0.74")
        with pytest.raises(ValueError, match="sector"):
            exact_ground_energy(SpectrumRequest(h, sector=(2, 7.0)))
