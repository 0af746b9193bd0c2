"""Jordan-Wigner transformation of fermionic operators.

Conventions (fixed package-wide):
  * spin orbital j maps to qubit j, no index reversal;
  * a_j  -> Z_0 ... Z_{j-1} (X_j + iY_j)/2,
    a+_j -> Z_0 ... Z_{j-1} (X_j - iY_j)/2  (Z string on LOWER indices).
"""

from __future__ import annotations

from .integrals import FermionOperator
from .pauli import PauliSum, PauliTerm, commutator, simplify


class ExcitationStructureError(ValueError):
    """Input is not the 8-string mutually-commuting image of a double excitation."""


def ladder_operator(index: int, is_creation: bool, n_qubits: int) -> PauliSum:
    """JW image of a single creation/annihilation operator."""
    if not 0 <= index < n_qubits:
        raise ValueError(f"spin-orbital index {index} >= n_qubits {n_qubits}")
    z_string = (1 << index) - 1
    x_part = PauliTerm(n_qubits, 1 << index, z_string, 0.5)
    y_coeff = -0.5j if is_creation else 0.5j
    y_part = PauliTerm(n_qubits, 1 << index, z_string | (1 << index), y_coeff)
    return PauliSum(n_qubits, [x_part, y_part])


def jordan_wigner(f: FermionOperator, n_qubits: int) -> PauliSum:
    """Map a fermionic operator to its qubit image, simplified."""
    total = PauliSum.zero(n_qubits)
    for coeff, product in f.terms:
        acc = PauliSum.identity(n_qubits, coeff)
        for index, is_creation in product:
            acc = acc @ ladder_operator(index, is_creation, n_qubits)
        total = total + acc
    return simplify(total)


def excitation_rotation_factors(g: PauliSum) -> list[tuple[PauliTerm, float]]:
    """Exact factorization of a double-excitation generator into 8 rotations.

    For the JW image g of a+a+aa - h.c. (8 strings, purely imaginary
    coefficients of equal magnitude, all mutually commuting) returns
    [(P_a, s_a)] in canonical mask order such that

        exp(theta * g) = prod_a exp(i * theta * s_a * P_a)

    with P_a unit-coefficient and s_a the signed magnitude (here +-1/8).
    """
    g = simplify(g)
    if len(g.terms) != 8:
        raise ExcitationStructureError(f"expected 8 strings, got {len(g.terms)}")
    magnitudes = {round(abs(t.coefficient), 14) for t in g.terms}
    if len(magnitudes) != 1:
        raise ExcitationStructureError("string coefficients differ in magnitude")
    factors = []
    for t in g.terms:
        if abs(t.coefficient.real) > 1e-12:
            raise ExcitationStructureError("coefficients must be purely imaginary")
        factors.append((t.with_coefficient(1.0), t.coefficient.imag))
    for a, _ in factors:
        for b, _ in factors:
            if not a.commutes_with(b):
                raise ExcitationStructureError("strings are not mutually commuting")
    return factors
