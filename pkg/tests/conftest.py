import functools
import json
from pathlib import Path

import pytest

from kadapt import (
    build_fermionic_hamiltonian,
    build_pool,
    hartree_fock_state,
    jordan_wigner,
    parse_fcidump,
    precompute_commutators,
)

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@functools.lru_cache(maxsize=None)
def load_integrals(stem):
    return parse_fcidump((DATA_DIR / f"{stem}.fcidump").read_text())


@functools.lru_cache(maxsize=None)
def load_hamiltonian(stem):
    m = load_integrals(stem)
    return jordan_wigner(build_fermionic_hamiltonian(m), m.n_qubits)


@functools.lru_cache(maxsize=None)
def load_pool(stem, with_commutators=False):
    m = load_integrals(stem)
    pool = build_pool(m.n_electrons, m.n_qubits)
    if with_commutators:
        pool = precompute_commutators(pool, load_hamiltonian(stem))
    return pool


def load_sidecar(stem):
    return json.loads((DATA_DIR / f"{stem}.json").read_text())


def load_hf_state(stem):
    m = load_integrals(stem)
    return hartree_fock_state(m.n_qubits, m.n_electrons)


@pytest.fixture(scope="session")
def h2():
    return load_integrals("h2_0.74")


@pytest.fixture(scope="session")
def h2_hamiltonian():
    return load_hamiltonian("h2_0.74")


@pytest.fixture(scope="session")
def lih():
    return load_integrals("lih_1.60")


@pytest.fixture(scope="session")
def beh2():
    return load_integrals("beh2_1.30")
