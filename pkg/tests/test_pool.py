from itertools import combinations

import pytest

from kadapt.integrals import number_operator, sz_operator
from kadapt.mapping import jordan_wigner
from kadapt.pauli import commutator, simplify
from kadapt.pool import PoolConfigurationError, build_pool, precompute_commutators

from conftest import load_hamiltonian


def brute_force_pool_size(n_electrons, n_spin_orbitals):
    """Enumerate sz-conserving occupied->virtual doubles directly."""
    occ = range(n_electrons)
    virt = range(n_electrons, n_spin_orbitals)
    count = 0
    for i, j in combinations(occ, 2):
        for a, b in combinations(virt, 2):
            if (i % 2) + (j % 2) == (a % 2) + (b % 2):
                count += 1
    return count


class TestPoolSizes:
    @pytest.mark.parametrize(
        "n_electrons,n_spin_orbitals,expected",
        [(2, 4, 1), (4, 12, 76), (6, 14, 180)],
    )
    def test_reference_molecule_sizes(self, n_electrons, n_spin_orbitals, expected):
        assert len(build_pool(n_electrons, n_spin_orbitals)) == expected

    @pytest.mark.parametrize("n_electrons", [2, 4, 6])
    @pytest.mark.parametrize("n_spin_orbitals", [8, 10, 12, 14])
    def test_matches_brute_force_enumeration(self, n_electrons, n_spin_orbitals):
        got = len(build_pool(n_electrons, n_spin_orbitals))
        assert got == brute_force_pool_size(n_electrons, n_spin_orbitals)

    def test_rejects_odd_electron_count(self):
        with pytest.raises(PoolConfigurationError):
            build_pool(3, 8)

    def test_rejects_no_virtuals(self):
        with pytest.raises(PoolConfigurationError):
            build_pool(4, 4)

    def test_category_counts(self):
        pool = build_pool(6, 14)
        counts = pool.category_counts()
        assert counts["mixed_spin"] + counts["same_spin"] == 180
        # same-spin: C(3,2)*C(4,2) per spin species
        assert counts["same_spin"] == 2 * 3 * 6


class TestPoolStructure:
    def test_labels_unique_and_canonically_ordered(self):
        pool = build_pool(4, 12)
        assert len(set(pool.labels)) == len(pool)
        keys = [(op.occ, op.virt) for op in pool.operators]
        assert keys == sorted(keys)

    def test_operators_are_anti_hermitian(self):
        for op in build_pool(4, 8).operators:
            assert op.qubit_image.is_anti_hermitian()

    def test_support_is_the_four_excitation_indices(self):
        pool = build_pool(2, 6)
        for op in pool.operators:
            assert op.support == tuple(sorted(op.occ + op.virt))

    def test_generators_conserve_particle_number_and_spin(self):
        n = 8
        n_image = jordan_wigner(number_operator(n), n)
        sz_image = jordan_wigner(sz_operator(n), n)
        for op in build_pool(4, n).operators:
            assert simplify(commutator(op.qubit_image, n_image)).terms == ()
            assert simplify(commutator(op.qubit_image, sz_image)).terms == ()

    def test_rotation_factors_count(self):
        for op in build_pool(2, 6).operators:
            assert len(op.rotation_factors) == 8


class TestPrecompute:
    def test_attaches_commutators(self):
        h = load_hamiltonian("h2_0.74")
        pool = build_pool(2, 4)
        assert not pool.commutators_ready
        ready = precompute_commutators(pool, h)
        assert ready.commutators_ready
        assert ready.hamiltonian is h

    def test_commutator_values(self):
        import numpy as np

        h = load_hamiltonian("h2_0.74")
        ready = precompute_commutators(build_pool(2, 4), h)
        op = ready.operators[0]
        gm = op.qubit_image.to_matrix()
        hm = h.to_matrix()
        assert np.allclose(op.commutator_with_h.to_matrix(), gm @ hm - hm @ gm, atol=1e-12)

    def test_idempotent(self):
        h = load_hamiltonian("h2_0.74")
        ready = precompute_commutators(build_pool(2, 4), h)
        assert precompute_commutators(ready, h) is ready

    def test_qubit_mismatch(self):
        from kadapt.pauli import QubitCountMismatch

        h = load_hamiltonian("h2_0.74")
        with pytest.raises(QubitCountMismatch):
            precompute_commutators(build_pool(2, 6), h)
