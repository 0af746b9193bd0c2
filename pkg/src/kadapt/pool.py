"""Symmetry-filtered double-excitation operator pool.

Occupied/virtual is defined by Hartree-Fock filling: spin orbitals
0..n_electrons-1 are occupied.  The pool keeps only spin-projection
conserving doubles hopping from two occupied to two virtual spin orbitals:
mixed-spin (one up + one down on each side) and same-spin pairs for both
spins.  No singles, no occupied->occupied or virtual->virtual hops.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations

from .integrals import FermionOperator
from .mapping import excitation_rotation_factors, jordan_wigner
from .pauli import PauliSum, PauliTerm, QubitCountMismatch, commutator


class PoolConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class ExcitationOperator:
    """Anti-Hermitian double-excitation generator with its qubit image."""

    occ: tuple[int, int]
    virt: tuple[int, int]
    label: str
    generator: FermionOperator
    qubit_image: PauliSum
    rotation_factors: tuple[tuple[PauliTerm, float], ...]
    commutator_with_h: PauliSum | None = None

    @property
    def same_spin(self) -> bool:
        return self.occ[0] % 2 == self.occ[1] % 2

    @property
    def support(self) -> tuple[int, ...]:
        """Qubits with an X/Y letter: exactly the four excitation indices."""
        return tuple(sorted(self.occ + self.virt))

    @property
    def z_string_qubits(self) -> tuple[int, ...]:
        """Qubits carrying only the JW parity Z."""
        out = 0
        for term, _ in self.rotation_factors:
            out |= term.z_mask & ~term.x_mask
        return tuple(q for q in range(self.qubit_image.n_qubits) if out >> q & 1)


@dataclass(frozen=True)
class OperatorPool:
    operators: tuple[ExcitationOperator, ...]
    n_qubits: int
    n_electrons: int
    hamiltonian: PauliSum | None = None  # set by precompute_commutators

    def __len__(self) -> int:
        return len(self.operators)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(op.label for op in self.operators)

    @property
    def commutators_ready(self) -> bool:
        return self.hamiltonian is not None and all(
            op.commutator_with_h is not None for op in self.operators
        )

    def category_counts(self) -> dict[str, int]:
        same = sum(1 for op in self.operators if op.same_spin)
        return {"mixed_spin": len(self.operators) - same, "same_spin": same}

    def summary(self) -> list[dict]:
        """JSON-ready per-operator summary for the ansatz report."""
        return [
            {
                "label": op.label,
                "occupied": list(op.occ),
                "virtual": list(op.virt),
                "support_qubits": list(op.support),
                "z_string_qubits": list(op.z_string_qubits),
                "same_spin": op.same_spin,
                "n_strings": len(op.qubit_image.terms),
            }
            for op in self.operators
        ]


def _make_operator(occ, virt, n_qubits) -> ExcitationOperator:
    i, j = sorted(occ)
    a, b = sorted(virt)
    gen = FermionOperator.from_term(
        1.0, [(a, True), (b, True), (j, False), (i, False)]
    )
    gen = gen - gen.adjoint()
    image = jordan_wigner(gen, n_qubits)
    return ExcitationOperator(
        occ=(i, j),
        virt=(a, b),
        label=f"D[{i},{j}->{a},{b}]",
        generator=gen,
        qubit_image=image,
        rotation_factors=tuple(excitation_rotation_factors(image)),
    )


def build_pool(n_electrons: int, n_spin_orbitals: int) -> OperatorPool:
    if n_electrons % 2:
        raise PoolConfigurationError("pool construction requires an even electron count")
    if not 0 < n_electrons < n_spin_orbitals:
        raise PoolConfigurationError("need at least one occupied and one virtual spin orbital")

    occ = range(n_electrons)
    virt = range(n_electrons, n_spin_orbitals)
    occ_up = [p for p in occ if p % 2 == 0]
    occ_dn = [p for p in occ if p % 2 == 1]
    virt_up = [p for p in virt if p % 2 == 0]
    virt_dn = [p for p in virt if p % 2 == 1]

    pairs = []
    for i in occ_up:
        for j in occ_dn:
            for a in virt_up:
                for b in virt_dn:
                    pairs.append(((i, j), (a, b)))
    for occ_s, virt_s in ((occ_up, virt_up), (occ_dn, virt_dn)):
        for i, j in combinations(occ_s, 2):
            for a, b in combinations(virt_s, 2):
                pairs.append(((i, j), (a, b)))

    ops = sorted(
        (_make_operator(o, v, n_spin_orbitals) for o, v in pairs),
        key=lambda op: (op.occ, op.virt),
    )
    labels = [op.label for op in ops]
    if len(set(labels)) != len(labels):
        raise AssertionError("duplicate excitation generated")
    return OperatorPool(tuple(ops), n_spin_orbitals, n_electrons)


def precompute_commutators(pool: OperatorPool, h: PauliSum) -> OperatorPool:
    """Attach [G, H] to every operator; idempotent for the same Hamiltonian."""
    if h.n_qubits != pool.n_qubits:
        raise QubitCountMismatch("Hamiltonian qubit count differs from pool")
    if pool.hamiltonian is h and pool.commutators_ready:
        return pool
    ops = tuple(
        replace(op, commutator_with_h=commutator(op.qubit_image, h))
        for op in pool.operators
    )
    return OperatorPool(ops, pool.n_qubits, pool.n_electrons, hamiltonian=h)
