"""FCIDUMP ingestion and second-quantized Hamiltonian assembly.

Spin-orbital ordering is interleaved throughout the package: spatial
orbital p maps to spin orbitals 2p (up) and 2p+1 (down).  Two-body values
are stored in chemists' notation (ij|kl) exactly as FCIDUMP does; the
reordering into the physicists' form happens in
``build_fermionic_hamiltonian``.
"""

from __future__ import annotations

import io
import re
from dataclasses import dataclass, field

import numpy as np


class FcidumpParseError(ValueError):
    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


def spin_orbital(spatial: int, spin: int) -> int:
    """Interleaved ordering: spin 0 = up -> 2p, spin 1 = down -> 2p+1."""
    return 2 * spatial + spin


@dataclass(frozen=True)
class MolecularIntegrals:
    """One-/two-electron integrals over spatial orbitals, in Hartree.

    ``two_body[i, j, k, l]`` holds the chemists'-notation integral (ij|kl)
    with the full 8-fold real-orbital symmetry already expanded.
    """

    n_spatial_orbitals: int
    n_electrons: int
    ms2: int
    core_energy: float
    one_body: np.ndarray
    two_body: np.ndarray

    def __post_init__(self):
        n = self.n_spatial_orbitals
        if self.one_body.shape != (n, n) or self.two_body.shape != (n, n, n, n):
            raise ValueError("integral array shapes inconsistent with orbital count")
        if self.n_electrons > 2 * n:
            raise ValueError("more electrons than spin orbitals")

    @property
    def n_spin_orbitals(self) -> int:
        return 2 * self.n_spatial_orbitals

    # alias: one qubit per spin orbital under JW
    n_qubits = n_spin_orbitals


@dataclass(frozen=True)
class FermionOperator:
    """Linear combination of ordered ladder-operator products.

    Each term is (coefficient, product) with product a tuple of
    (spin-orbital index, is_creation) pairs, kept in the order written.
    """

    terms: tuple[tuple[complex, tuple[tuple[int, bool], ...]], ...] = ()

    @classmethod
    def from_term(cls, coefficient: complex, product) -> "FermionOperator":
        return cls(((complex(coefficient), tuple((int(i), bool(c)) for i, c in product)),))

    @classmethod
    def identity(cls, coefficient: complex = 1.0) -> "FermionOperator":
        return cls.from_term(coefficient, ())

    @classmethod
    def zero(cls) -> "FermionOperator":
        return cls()

    def __add__(self, other: "FermionOperator") -> "FermionOperator":
        return FermionOperator(self.terms + other.terms)

    def __sub__(self, other: "FermionOperator") -> "FermionOperator":
        return self + (-1.0) * other

    def __mul__(self, scalar):
        return FermionOperator(tuple((c * scalar, p) for c, p in self.terms))

    __rmul__ = __mul__

    def adjoint(self) -> "FermionOperator":
        return FermionOperator(
            tuple(
                (c.conjugate(), tuple((i, not cr) for i, cr in reversed(p)))
                for c, p in self.terms
            )
        )

    def simplify(self, drop_tol: float = 1e-12) -> "FermionOperator":
        """Merge identical ordered products; no normal reordering is done."""
        merged: dict[tuple, complex] = {}
        for c, p in self.terms:
            merged[p] = merged.get(p, 0.0) + c
        return FermionOperator(
            tuple((c, p) for p, c in sorted(merged.items()) if abs(c) >= drop_tol)
        )

    def max_index(self) -> int:
        return max((i for _, p in self.terms for i, _ in p), default=-1)


def number_operator(n_spin_orbitals: int) -> FermionOperator:
    op = FermionOperator.zero()
    for p in range(n_spin_orbitals):
        op = op + FermionOperator.from_term(1.0, [(p, True), (p, False)])
    return op


def sz_operator(n_spin_orbitals: int) -> FermionOperator:
    """Total z spin projection (in units of hbar) under interleaved ordering."""
    op = FermionOperator.zero()
    for p in range(n_spin_orbitals):
        sign = 0.5 if p % 2 == 0 else -0.5
        op = op + FermionOperator.from_term(sign, [(p, True), (p, False)])
    return op


_HEADER_INT = {"NORB": "n_orb", "NELEC": "n_elec", "MS2": "ms2"}


def parse_fcidump(text) -> MolecularIntegrals:
    """Parse an FCIDUMP character stream (str or readable text object)."""
    if hasattr(text, "read"):
        text = text.read()
    lines = io.StringIO(text).read().splitlines()

    # namelist header: &FCI ... &END (or "/"), possibly spanning lines
    header_parts: list[str] = []
    body_start = None
    for ln, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not header_parts:
            if not stripped:
                continue
            if not stripped.upper().startswith("&FCI"):
                raise FcidumpParseError("file does not start with an &FCI namelist", ln)
            stripped = stripped[4:]
        header_parts.append(stripped)
        joined = " ".join(header_parts)
        if "&END" in joined.upper() or "/" in joined:
            body_start = ln
            break
    if body_start is None:
        raise FcidumpParseError("unterminated &FCI namelist header")

    header = " ".join(header_parts)
    header = re.split(r"&END|/", header, flags=re.IGNORECASE)[0]
    fields: dict[str, int] = {}
    for key, alias in _HEADER_INT.items():
        m = re.search(rf"{key}\s*=\s*(-?\d+)", header, flags=re.IGNORECASE)
        if m:
            fields[alias] = int(m.group(1))
    if "n_orb" not in fields or "n_elec" not in fields:
        raise FcidumpParseError("header must declare NORB and NELEC", body_start)
    n_orb = fields["n_orb"]
    if n_orb <= 0:
        raise FcidumpParseError("NORB must be positive", body_start)

    one = np.zeros((n_orb, n_orb))
    two = np.zeros((n_orb, n_orb, n_orb, n_orb))
    core = 0.0

    for ln, raw in enumerate(lines[body_start:], start=body_start + 1):
        parts = raw.split()
        if not parts:
            continue
        if len(parts) != 5:
            raise FcidumpParseError(
                f"expected 'value i j k l', got {len(parts)} fields", ln
            )
        try:
            value = float(parts[0])
            i, j, k, l = (int(x) for x in parts[1:])
        except ValueError:
            raise FcidumpParseError(f"non-numeric entry in {raw.strip()!r}", ln) from None
        for idx in (i, j, k, l):
            if not 0 <= idx <= n_orb:
                raise FcidumpParseError(f"orbital index {idx} outside [0, {n_orb}]", ln)
        if i == j == k == l == 0:
            core = value
        elif k == 0 and l == 0:
            if j == 0:
                continue  # MOLPRO-style orbital-energy record; not used
            one[i - 1, j - 1] = value
            one[j - 1, i - 1] = value
        elif 0 in (i, j, k, l):
            raise FcidumpParseError(f"unsupported index pattern ({i} {j} {k} {l})", ln)
        else:
            a, b, c, d = i - 1, j - 1, k - 1, l - 1
            for p, q, r, s in (
                (a, b, c, d), (b, a, c, d), (a, b, d, c), (b, a, d, c),
                (c, d, a, b), (d, c, a, b), (c, d, b, a), (d, c, b, a),
            ):
                two[p, q, r, s] = value

    return MolecularIntegrals(
        n_spatial_orbitals=n_orb,
        n_electrons=fields["n_elec"],
        ms2=fields.get("ms2", 0),
        core_energy=core,
        one_body=one,
        two_body=two,
    )


def write_fcidump(m: MolecularIntegrals) -> str:
    """Serialize integrals back to FCIDUMP text (canonical unique entries)."""
    n = m.n_spatial_orbitals
    out = [
        f"&FCI NORB={n},NELEC={m.n_electrons},MS2={m.ms2},",
        " ORBSYM=" + "1," * n,
        " ISYM=1,",
        "&END",
    ]

    def row(value, i, j, k, l):
        out.append(f" {value: .16e} {i:3d} {j:3d} {k:3d} {l:3d}")

    seen = set()
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    v = m.two_body[i, j, k, l]
                    if v == 0.0:
                        continue
                    canon = min(
                        (i, j, k, l), (j, i, k, l), (i, j, l, k), (j, i, l, k),
                        (k, l, i, j), (l, k, i, j), (k, l, j, i), (l, k, j, i),
                    )
                    if canon in seen:
                        continue
                    seen.add(canon)
                    row(v, canon[0] + 1, canon[1] + 1, canon[2] + 1, canon[3] + 1)
    for i in range(n):
        for j in range(i + 1):
            if m.one_body[i, j] != 0.0:
                row(m.one_body[i, j], i + 1, j + 1, 0, 0)
    row(m.core_energy, 0, 0, 0, 0)
    return "\n".join(out) + "\n"


def build_fermionic_hamiltonian(m: MolecularIntegrals) -> FermionOperator:
    """Second-quantized Hamiltonian over spin orbitals, plus core energy.

    One-body part sums h_pq a+_p a_q over both spins; the two-body part is
    1/2 sum (ij|kl) a+_{i,s} a+_{k,t} a_{l,t} a_{j,s}, i.e. chemists'
    integrals placed in the physicists' operator ordering.
    """
    n = m.n_spatial_orbitals
    terms = [(complex(m.core_energy), ())]
    for p in range(n):
        for q in range(n):
            h = m.one_body[p, q]
            if abs(h) < 1e-14:
                continue
            for s in (0, 1):
                terms.append(
                    (complex(h), ((spin_orbital(p, s), True), (spin_orbital(q, s), False)))
                )
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    g = m.two_body[i, j, k, l]
                    if abs(g) < 1e-14:
                        continue
                    for s in (0, 1):
                        for t in (0, 1):
                            terms.append(
                                (
                                    complex(0.5 * g),
                                    (
                                        (spin_orbital(i, s), True),
                                        (spin_orbital(k, t), True),
                                        (spin_orbital(l, t), False),
                                        (spin_orbital(j, s), False),
                                    ),
                                )
                            )
    return FermionOperator(tuple(terms)).simplify()
