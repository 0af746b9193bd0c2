"""Exact ground-state reference by diagonalizing the qubit Hamiltonian.

Small problems are solved densely; larger ones use a matrix-free Lanczos
(scipy eigsh over a LinearOperator that applies the Pauli sum directly).
A particle-number / spin-projection sector restriction masks basis states
by popcount, which keeps even 20-qubit references tractable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse.linalg import LinearOperator, eigsh

from . import kernels
from .pauli import PauliSum

MAX_QUBITS = 24
DENSE_MAX_QUBITS = 10  # full-space dense solve above this would exceed desk memory
DENSE_MAX_SECTOR_DIM = 20_000

_EVEN_BITS = 0x5555555555555555


class NonHermitianError(ValueError):
    pass


@dataclass(frozen=True)
class SpectrumRequest:
    hamiltonian: PauliSum
    sector: tuple[int, float] | None = None  # (n_electrons, s_z)
    n_eigenvalues: int = 1


def _popcount_array(v: np.ndarray) -> np.ndarray:
    out = np.zeros_like(v)
    while np.any(v):
        out += v & 1
        v = v >> 1
    return out


def sector_basis(n_qubits: int, n_electrons: int, s_z: float) -> np.ndarray:
    """Basis indices with the given particle number and spin projection.

    Interleaved ordering: even qubits are spin-up, odd are spin-down;
    s_z = (n_up - n_down) / 2.
    """
    states = np.arange(1 << n_qubits, dtype=np.int64)
    n_up = _popcount_array(states & _EVEN_BITS)
    n_total = _popcount_array(states)
    keep = (n_total == n_electrons) & (2 * n_up - n_electrons == round(2 * s_z))
    return states[keep]


def _check_hermitian(h: PauliSum) -> PauliSum:
    h = h.simplify()
    if not all(abs(t.coefficient.imag) <= 1e-10 for t in h.terms):
        raise NonHermitianError("Hamiltonian has non-real Pauli coefficients")
    return h


def _dense_sector_matrix(h: PauliSum, basis: np.ndarray) -> np.ndarray:
    position = np.full(1 << h.n_qubits, -1, dtype=np.int64)
    position[basis] = np.arange(len(basis))
    m = np.zeros((len(basis), len(basis)), dtype=complex)
    xms, zms, cs = h.packed()
    cols = np.arange(len(basis))
    for xm, zm, c in zip(xms, zms, cs):
        rows = position[basis ^ xm]
        keep = rows >= 0  # project: single strings may leave the sector, the sum does not
        signs = 1.0 - 2.0 * _parity(basis & zm)
        m[rows[keep], cols[keep]] += c * signs[keep]
    return m


def _parity(v: np.ndarray) -> np.ndarray:
    p = kernels.PARITY16
    return p[v & 0xFFFF] ^ p[(v >> 16) & 0xFFFF] ^ p[(v >> 32) & 0xFFFF] ^ p[(v >> 48) & 0xFFFF]


def _dense_eigenvalues(h: PauliSum, basis: np.ndarray, k: int) -> np.ndarray:
    m = _dense_sector_matrix(h, basis)
    return np.linalg.eigvalsh(m)[:k]


def _lanczos_eigenvalues(h: PauliSum, basis: np.ndarray | None, k: int) -> np.ndarray:
    xms, zms, cs = h.packed()
    dim_full = 1 << h.n_qubits
    if basis is None:
        def matvec(v):
            return kernels.sum_apply(np.ascontiguousarray(v, dtype=complex), xms, zms, cs)

        dim = dim_full
    else:
        position = np.full(dim_full, -1, dtype=np.int64)
        position[basis] = np.arange(len(basis))

        def matvec(v):
            full = np.zeros(dim_full, dtype=complex)
            full[basis] = v
            out = kernels.sum_apply(full, xms, zms, cs)
            return out[basis]

        dim = len(basis)

    # deterministic start vector: lowest-index basis state (the HF determinant
    # when the sector is the HF sector), slightly mixed for robustness
    v0 = np.full(dim, 1e-3, dtype=complex)
    v0[0] = 1.0
    op = LinearOperator((dim, dim), matvec=matvec, dtype=complex)
    vals = eigsh(op, k=k, which="SA", v0=v0, tol=1e-12, return_eigenvectors=False)
    return np.sort(vals)


def exact_eigenvalues(req: SpectrumRequest) -> np.ndarray:
    h = _check_hermitian(req.hamiltonian)
    n = h.n_qubits
    if n > MAX_QUBITS:
        raise ValueError(f"refusing to diagonalize beyond {MAX_QUBITS} qubits")
    k = req.n_eigenvalues
    if req.sector is not None:
        n_elec, s_z = req.sector
        basis = sector_basis(n, n_elec, s_z)
        if len(basis) == 0:
            raise ValueError("empty symmetry sector")
        if len(basis) <= DENSE_MAX_SECTOR_DIM:
            return _dense_eigenvalues(h, basis, k)
        return _lanczos_eigenvalues(h, basis, k)
    if n <= DENSE_MAX_QUBITS:
        return _dense_eigenvalues(h, np.arange(1 << n, dtype=np.int64), k)
    return _lanczos_eigenvalues(h, None, k)


def exact_ground_energy(req: SpectrumRequest) -> float:
    return float(exact_eigenvalues(req)[0])
