"""Exact dense statevector simulation: 2^n complex amplitudes, qubit k is
bit k of the basis index."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .pauli import PauliSum, PauliTerm, QubitCountMismatch


@dataclass
class Statevector:
    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if self.amplitudes.shape != (1 << self.n_qubits,):
            raise ValueError("amplitude count is not 2^n_qubits")

    @classmethod
    def basis_state(cls, n_qubits: int, index: int) -> "Statevector":
        amps = np.zeros(1 << n_qubits, dtype=complex)
        amps[index] = 1.0
        return cls(n_qubits, amps)

    def copy(self) -> "Statevector":
        return Statevector(self.n_qubits, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def inner(self, other: "Statevector") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def hartree_fock_state(n_qubits: int, n_electrons: int) -> Statevector:
    """Computational-basis determinant with spin orbitals 0..n_electrons-1 filled."""
    if n_electrons > n_qubits:
        raise ValueError("n_electrons exceeds n_qubits")
    return Statevector.basis_state(n_qubits, (1 << n_electrons) - 1)


def apply_pauli_rotation(s: Statevector, p: PauliTerm, angle: float) -> Statevector:
    """Return cos(angle)|s> + i sin(angle) P|s> (i.e. exp(i*angle*P)|s>)."""
    out = s.copy()
    _rotate_inplace(out.amplitudes, p, angle)
    return out


def _rotate_inplace(amplitudes: np.ndarray, p: PauliTerm, angle: float) -> None:
    if abs(abs(p.coefficient) - 1.0) > 1e-12:
        raise ValueError("rotation requires a unit-modulus string coefficient")
    phase = complex(p.coefficient) * p.phase
    kernels.rotate_inplace(
        amplitudes, np.int64(p.x_mask), np.int64(p.z_mask), phase,
        math.cos(angle), math.sin(angle),
    )


def apply_excitation(s: Statevector, e, theta: float) -> Statevector:
    """Apply exp(theta*G) via the exact 8-rotation factorization of e."""
    out = s.copy()
    for term, scale in e.rotation_factors:
        _rotate_inplace(out.amplitudes, term, theta * scale)
    return out


def apply_pauli_sum(s: Statevector, h: PauliSum) -> Statevector:
    """Return h|s> (not normalized)."""
    if h.n_qubits != s.n_qubits:
        raise QubitCountMismatch("qubit counts differ")
    xms, zms, cs = h.packed()
    return Statevector(s.n_qubits, kernels.sum_apply(s.amplitudes, xms, zms, cs))


def expectation(s: Statevector, h):
    """<s|h|s> for a PauliSum or PauliTerm.

    Returns a float when the imaginary residue is below 1e-10 (Hermitian
    input), otherwise the complex value.
    """
    if isinstance(h, PauliTerm):
        h = PauliSum(h.n_qubits, [h])
    if h.n_qubits != s.n_qubits:
        raise QubitCountMismatch("qubit counts differ")
    xms, zms, cs = h.packed()
    value = complex(kernels.sum_expectation(s.amplitudes, xms, zms, cs))
    if abs(value.imag) < 1e-10:
        return value.real
    return value
