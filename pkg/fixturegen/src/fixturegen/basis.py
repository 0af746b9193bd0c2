"""STO-3G basis construction for H, Li, Be, N.

Exponents are the standard least-squares STO fits at zeta=1 scaled by the
published per-element Slater exponents (alpha = alpha_std * zeta^2); the
contraction coefficients refer to normalized primitives.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ANGSTROM_TO_BOHR = 1.8897259886

# zeta = 1 STO-3G fits
_S1_EXP = np.array([2.227660584, 0.405771156, 0.109818])
_S1_COEF = np.array([0.154328967, 0.535328142, 0.444634542])
_SP2_EXP = np.array([0.994203, 0.231031, 0.0751386])
_S2_COEF = np.array([-0.099967229, 0.399512826, 0.700115469])
_P2_COEF = np.array([0.155916275, 0.607683719, 0.391957393])

# Slater scaling exponents (1s, 2sp)
_ZETA = {
    "H": (1.24, None),
    "Li": (2.69, 0.80),
    "Be": (3.68, 1.15),
    "N": (6.67, 1.95),
}

ATOMIC_NUMBER = {"H": 1, "Li": 3, "Be": 4, "N": 7}


@dataclass(frozen=True)
class ContractedGaussian:
    """Normalized contracted Cartesian Gaussian."""

    lmn: tuple[int, int, int]
    center: np.ndarray
    exponents: np.ndarray
    coefficients: np.ndarray  # includes primitive and contracted normalization


def _double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def _primitive_norm(alpha: float, lmn) -> float:
    l, m, n = lmn
    L = l + m + n
    num = (2 * alpha / np.pi) ** 0.75 * (4 * alpha) ** (L / 2)
    den = np.sqrt(
        _double_factorial(2 * l - 1)
        * _double_factorial(2 * m - 1)
        * _double_factorial(2 * n - 1)
    )
    return num / den


def _contract(lmn, center, exps, coefs) -> ContractedGaussian:
    coefs = coefs * np.array([_primitive_norm(a, lmn) for a in exps])
    # normalize the contracted function via its self-overlap
    from .integrals import overlap_primitive

    s = 0.0
    for a, ca in zip(exps, coefs):
        for b, cb in zip(exps, coefs):
            s += ca * cb * overlap_primitive(a, lmn, center, b, lmn, center)
    coefs = coefs / np.sqrt(s)
    return ContractedGaussian(tuple(lmn), np.asarray(center, float), exps, coefs)


def atom_basis(symbol: str, center) -> list[ContractedGaussian]:
    z1, z2 = _ZETA[symbol]
    shells = [_contract((0, 0, 0), center, _S1_EXP * z1**2, _S1_COEF.copy())]
    if z2 is not None:
        shells.append(_contract((0, 0, 0), center, _SP2_EXP * z2**2, _S2_COEF.copy()))
        for lmn in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            shells.append(_contract(lmn, center, _SP2_EXP * z2**2, _P2_COEF.copy()))
    return shells


@dataclass(frozen=True)
class Molecule:
    name: str
    symbols: tuple[str, ...]
    coords_bohr: np.ndarray  # (n_atoms, 3)
    charge: int = 0

    @property
    def n_electrons(self) -> int:
        return sum(ATOMIC_NUMBER[s] for s in self.symbols) - self.charge

    def basis(self) -> list[ContractedGaussian]:
        out = []
        for sym, xyz in zip(self.symbols, self.coords_bohr):
            out.extend(atom_basis(sym, xyz))
        return out

    def nuclear_repulsion(self) -> float:
        e = 0.0
        for i in range(len(self.symbols)):
            for j in range(i):
                zi = ATOMIC_NUMBER[self.symbols[i]]
                zj = ATOMIC_NUMBER[self.symbols[j]]
                e += zi * zj / np.linalg.norm(self.coords_bohr[i] - self.coords_bohr[j])
        return e


def make_molecule(name: str, bond_length_angstrom: float) -> Molecule:
    """Supported geometries: H2, LiH, N2 (diatomic), linear symmetric BeH2."""
    r = bond_length_angstrom * ANGSTROM_TO_BOHR
    name = name.lower()
    if name == "h2":
        return Molecule("H2", ("H", "H"), np.array([[0, 0, 0], [0, 0, r]], float))
    if name == "lih":
        return Molecule("LiH", ("Li", "H"), np.array([[0, 0, 0], [0, 0, r]], float))
    if name == "n2":
        return Molecule("N2", ("N", "N"), np.array([[0, 0, 0], [0, 0, r]], float))
    if name == "beh2":
        return Molecule(
            "BeH2", ("Be", "H", "H"), np.array([[0, 0, 0], [0, 0, r], [0, 0, -r]], float)
        )
    raise ValueError(f"unsupported molecule {name!r}")
