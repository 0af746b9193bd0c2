"""Adaptive variational ground-state solver for molecular Hamiltonians.

Pipeline: FCIDUMP integrals -> second-quantized Hamiltonian -> Jordan-Wigner
qubit operator -> gradient-screened excitation pool -> chunked adaptive
ansatz growth with derivative-free optimization -> energies benchmarked
against exact diagonalization.
"""

from .adapt import (
    AdaptConfig,
    AdaptResult,
    CallLedger,
    ansatz_report,
    ansatz_state,
    assumed_call_total,
    call_cost_ratio,
    gradient_screen,
    quantum_call_report,
    render_ansatz_report,
    run_adapt,
    select_top_k,
)
from .fci import SpectrumRequest, exact_eigenvalues, exact_ground_energy
from .integrals import (
    FcidumpParseError,
    FermionOperator,
    MolecularIntegrals,
    build_fermionic_hamiltonian,
    parse_fcidump,
    write_fcidump,
)
from .mapping import excitation_rotation_factors, jordan_wigner, ladder_operator
from .optimizer import OptimizationOutcome, OptimizerConfig, minimize
from .pauli import PauliSum, PauliTerm, commutator
from .pool import ExcitationOperator, OperatorPool, build_pool, precompute_commutators
from .statevector import (
    Statevector,
    apply_excitation,
    apply_pauli_rotation,
    apply_pauli_sum,
    expectation,
    hartree_fock_state,
)

__version__ = "0.1.0"

__all__ = [
    "AdaptConfig",
    "AdaptResult",
    "CallLedger",
    "ExcitationOperator",
    "FcidumpParseError",
    "FermionOperator",
    "MolecularIntegrals",
    "OperatorPool",
    "OptimizationOutcome",
    "OptimizerConfig",
    "PauliSum",
    "PauliTerm",
    "SpectrumRequest",
    "Statevector",
    "ansatz_report",
    "ansatz_state",
    "apply_excitation",
    "apply_pauli_rotation",
    "apply_pauli_sum",
    "assumed_call_total",
    "build_fermionic_hamiltonian",
    "build_pool",
    "call_cost_ratio",
    "commutator",
    "exact_eigenvalues",
    "exact_ground_energy",
    "excitation_rotation_factors",
    "expectation",
    "gradient_screen",
    "hartree_fock_state",
    "jordan_wigner",
    "ladder_operator",
    "minimize",
    "parse_fcidump",
    "precompute_commutators",
    "quantum_call_report",
    "render_ansatz_report",
    "run_adapt",
    "select_top_k",
    "write_fcidump",
]
