"""Exact symbolic algebra on Pauli strings and sums.

Strings are stored symplectically: bit k of ``x_mask`` marks an X component
on qubit k, bit k of ``z_mask`` a Z component; both bits set means Y, neither
means identity.  The stored operator is the literal tensor product of
I/X/Y/Z letters (no hidden global phase): internally that is
``i^y * X(x_mask) * Z(z_mask)`` with ``y = popcount(x_mask & z_mask)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels

MAX_QUBITS = 64  # masks must fit one machine word

_I_POW = (1 + 0j, 1j, -1 + 0j, -1j)  # exact i^k

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_1Q = {"I": np.eye(2, dtype=complex), "X": _X, "Y": _Y, "Z": _Z}


class QubitCountMismatch(ValueError):
    pass


def _check_n(n_qubits: int) -> None:
    if not 0 < n_qubits <= MAX_QUBITS:
        raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}], got {n_qubits}")


def _popcount(v: int) -> int:
    return bin(v).count("1")


@dataclass(frozen=True, slots=True)
class PauliTerm:
    """A coefficient-weighted Pauli string on ``n_qubits`` qubits."""

    n_qubits: int
    x_mask: int
    z_mask: int
    coefficient: complex

    def __post_init__(self):
        _check_n(self.n_qubits)
        full = (1 << self.n_qubits) - 1
        if self.x_mask & ~full or self.z_mask & ~full:
            raise ValueError("mask exceeds qubit count")

    @classmethod
    def identity(cls, n_qubits: int, coefficient: complex = 1.0) -> "PauliTerm":
        return cls(n_qubits, 0, 0, coefficient)

    @classmethod
    def from_ops(cls, n_qubits: int, ops: dict[int, str], coefficient: complex = 1.0) -> "PauliTerm":
        """Build from a {qubit: 'X'|'Y'|'Z'} map."""
        xm = zm = 0
        for q, letter in ops.items():
            if not 0 <= q < n_qubits:
                raise ValueError(f"qubit {q} out of range for n_qubits={n_qubits}")
            if letter in ("X", "Y"):
                xm |= 1 << q
            if letter in ("Z", "Y"):
                zm |= 1 << q
            if letter not in ("X", "Y", "Z"):
                raise ValueError(f"unknown Pauli letter {letter!r}")
        return cls(n_qubits, xm, zm, coefficient)

    @property
    def y_count(self) -> int:
        return _popcount(self.x_mask & self.z_mask)

    @property
    def phase(self) -> complex:
        """i^y factor turning X(x)Z(z) into the literal I/X/Y/Z product."""
        return _I_POW[self.y_count % 4]

    def letter(self, qubit: int) -> str:
        x = (self.x_mask >> qubit) & 1
        z = (self.z_mask >> qubit) & 1
        return ("I", "X", "Z", "Y")[x + 2 * z]

    @property
    def support(self) -> tuple[int, ...]:
        """Qubits carrying a non-identity letter."""
        return tuple(q for q in range(self.n_qubits) if (self.x_mask | self.z_mask) >> q & 1)

    def commutes_with(self, other: "PauliTerm") -> bool:
        if self.n_qubits != other.n_qubits:
            raise QubitCountMismatch("qubit counts differ")
        return (
            _popcount(self.x_mask & other.z_mask) + _popcount(self.z_mask & other.x_mask)
        ) % 2 == 0

    def with_coefficient(self, coefficient: complex) -> "PauliTerm":
        return PauliTerm(self.n_qubits, self.x_mask, self.z_mask, coefficient)

    def __mul__(self, other):
        if isinstance(other, PauliTerm):
            return multiply(self, other)
        return self.with_coefficient(self.coefficient * other)

    __rmul__ = __mul__

    def to_matrix(self) -> np.ndarray:
        """Dense matrix, qubit 0 = least-significant bit of the basis index."""
        m = np.array([[self.coefficient]], dtype=complex)
        for q in range(self.n_qubits):
            m = np.kron(_1Q[self.letter(q)], m)
        return m

    def __str__(self) -> str:
        letters = " ".join(
            f"{self.letter(q)}{q}" for q in range(self.n_qubits) if self.letter(q) != "I"
        )
        return f"{complex(self.coefficient)} {letters or 'I'}"


def multiply(a: PauliTerm, b: PauliTerm) -> PauliTerm:
    """Product of two Pauli strings with exact phase tracking."""
    if a.n_qubits != b.n_qubits:
        raise QubitCountMismatch("qubit counts differ")
    xm = a.x_mask ^ b.x_mask
    zm = a.z_mask ^ b.z_mask
    yc = _popcount(xm & zm)
    k = (a.y_count + b.y_count - yc) % 4
    sign = -1.0 if _popcount(a.z_mask & b.x_mask) % 2 else 1.0
    coeff = a.coefficient * b.coefficient * _I_POW[k] * sign
    return PauliTerm(a.n_qubits, xm, zm, coeff)


class PauliSum:
    """A sum of Pauli strings over a common qubit count.

    Treated as immutable; numeric mask/coefficient arrays are cached lazily
    for the simulator kernels.
    """

    __slots__ = ("n_qubits", "terms", "_packed")

    def __init__(self, n_qubits: int, terms=()):
        _check_n(n_qubits)
        terms = tuple(terms)
        for t in terms:
            if t.n_qubits != n_qubits:
                raise QubitCountMismatch("term qubit count differs from sum")
        self.n_qubits = n_qubits
        self.terms = terms
        self._packed = None

    @classmethod
    def zero(cls, n_qubits: int) -> "PauliSum":
        return cls(n_qubits)

    @classmethod
    def identity(cls, n_qubits: int, coefficient: complex = 1.0) -> "PauliSum":
        return cls(n_qubits, [PauliTerm.identity(n_qubits, coefficient)])

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "PauliSum") -> "PauliSum":
        if self.n_qubits != other.n_qubits:
            raise QubitCountMismatch("qubit counts differ")
        return PauliSum(self.n_qubits, self.terms + other.terms)

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        return self + (-1.0) * other

    def __mul__(self, scalar):
        if isinstance(scalar, (PauliSum, PauliTerm)):
            return NotImplemented
        return PauliSum(self.n_qubits, [t * scalar for t in self.terms])

    __rmul__ = __mul__

    def __matmul__(self, other: "PauliSum") -> "PauliSum":
        """Operator product, term by term (no simplification)."""
        return PauliSum(
            self.n_qubits, [multiply(a, b) for a in self.terms for b in other.terms]
        )

    def adjoint(self) -> "PauliSum":
        return PauliSum(
            self.n_qubits, [t.with_coefficient(t.coefficient.conjugate()) for t in self.terms]
        )

    def simplify(self, drop_tol: float = 1e-12) -> "PauliSum":
        return simplify(self, drop_tol)

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return all(abs(t.coefficient.imag) <= tol for t in self.simplify().terms)

    def is_anti_hermitian(self, tol: float = 1e-12) -> bool:
        return all(abs(t.coefficient.real) <= tol for t in self.simplify().terms)

    def packed(self):
        """(x_masks, z_masks, coeffs) arrays with the i^y phase folded in."""
        if self._packed is None:
            xm = np.array([t.x_mask for t in self.terms], dtype=np.int64)
            zm = np.array([t.z_mask for t in self.terms], dtype=np.int64)
            cs = np.array([t.coefficient * t.phase for t in self.terms], dtype=complex)
            self._packed = (xm, zm, cs)
        return self._packed

    def to_matrix(self) -> np.ndarray:
        dim = 1 << self.n_qubits
        m = np.zeros((dim, dim), dtype=complex)
        xms, zms, cs = self.packed()
        basis = np.arange(dim, dtype=np.int64)
        for xm, zm, c in zip(xms, zms, cs):
            rows = basis ^ xm
            signs = 1.0 - 2.0 * _parity_array(basis & zm)
            m[rows, basis] += c * signs
        return m

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PauliSum)
            and self.n_qubits == other.n_qubits
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n_qubits, self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({t})" for t in self.terms)


def _parity_array(v: np.ndarray) -> np.ndarray:
    p = kernels.PARITY16
    return p[v & 0xFFFF] ^ p[(v >> 16) & 0xFFFF] ^ p[(v >> 32) & 0xFFFF] ^ p[(v >> 48) & 0xFFFF]


def simplify(s: PauliSum, drop_tol: float = 1e-12) -> PauliSum:
    """Merge duplicate strings, drop negligible coefficients, sort canonically."""
    merged: dict[tuple[int, int], complex] = {}
    for t in s.terms:
        key = (t.x_mask, t.z_mask)
        merged[key] = merged.get(key, 0.0) + t.coefficient
    terms = [
        PauliTerm(s.n_qubits, xm, zm, c)
        for (xm, zm), c in sorted(merged.items())
        if abs(c) >= drop_tol
    ]
    return PauliSum(s.n_qubits, terms)


def commutator(a: PauliSum, b: PauliSum) -> PauliSum:
    """[a, b] = ab - ba, simplified.

    Commuting string pairs drop out exactly; each anticommuting pair
    contributes 2ab.
    """
    if a.n_qubits != b.n_qubits:
        raise QubitCountMismatch("qubit counts differ")
    terms = []
    for ta in a.terms:
        for tb in b.terms:
            if not ta.commutes_with(tb):
                p = multiply(ta, tb)
                terms.append(p.with_coefficient(2.0 * p.coefficient))
    return simplify(PauliSum(a.n_qubits, terms))
