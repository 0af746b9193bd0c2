"""Restricted Hartree-Fock with DIIS acceleration."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import Molecule
from .integrals import eri_tensor, kinetic_matrix, nuclear_matrix, overlap_matrix


class ScfError(RuntimeError):
    pass


@dataclass
class ScfResult:
    molecule: Molecule
    energy: float  # total RHF energy incl. nuclear repulsion
    mo_coefficients: np.ndarray  # (n_ao, n_mo), columns ordered by orbital energy
    mo_energies: np.ndarray
    h_core: np.ndarray
    eri_ao: np.ndarray  # chemists' (ij|kl)
    nuclear_repulsion: float


def _fock(h, eri, density):
    j = np.einsum("pqrs,rs->pq", eri, density)
    k = np.einsum("prqs,rs->pq", eri, density)
    return h + j - 0.5 * k


def run_rhf(molecule: Molecule, max_cycles: int = 200, conv_tol: float = 1e-11) -> ScfResult:
    if molecule.n_electrons % 2:
        raise ScfError("RHF requires an even electron count")
    basis = molecule.basis()
    s = overlap_matrix(basis)
    h = kinetic_matrix(basis) + nuclear_matrix(basis, molecule)
    eri = eri_tensor(basis)
    e_nuc = molecule.nuclear_repulsion()
    n_occ = molecule.n_electrons // 2

    # symmetric orthogonalization
    w, u = np.linalg.eigh(s)
    x = u @ np.diag(w**-0.5) @ u.T

    def solve(f):
        fp = x.T @ f @ x
        eps, cp = np.linalg.eigh(fp)
        c = x @ cp
        return eps, c

    eps, c = solve(h)
    density = 2.0 * c[:, :n_occ] @ c[:, :n_occ].T

    diis_f, diis_e = [], []
    energy = 0.0
    for cycle in range(max_cycles):
        f = _fock(h, eri, density)
        err = f @ density @ s - s @ density @ f
        diis_f.append(f)
        diis_e.append(err)
        if len(diis_f) > 8:
            diis_f.pop(0)
            diis_e.pop(0)
        if len(diis_f) > 1:
            m = len(diis_f)
            b = -np.ones((m + 1, m + 1))
            b[m, m] = 0.0
            for a in range(m):
                for bb in range(m):
                    b[a, bb] = np.sum(diis_e[a] * diis_e[bb])
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            try:
                coeffs = np.linalg.solve(b, rhs)[:m]
                f = sum(ci * fi for ci, fi in zip(coeffs, diis_f))
            except np.linalg.LinAlgError:
                pass

        eps, c = solve(f)
        density_new = 2.0 * c[:, :n_occ] @ c[:, :n_occ].T
        f_raw = _fock(h, eri, density_new)
        energy_new = 0.5 * np.sum(density_new * (h + f_raw)) + e_nuc
        delta = abs(energy_new - energy)
        d_rms = np.sqrt(np.mean((density_new - density) ** 2))
        density, energy = density_new, energy_new
        if cycle > 1 and delta < conv_tol and d_rms < 1e-8:
            return ScfResult(molecule, float(energy), c, eps, h, eri, e_nuc)

    raise ScfError(f"SCF did not converge in {max_cycles} cycles for {molecule.name}")


def mo_integrals(res: ScfResult):
    """Transform to the MO basis: returns (one_body, two_body chemists')."""
    c = res.mo_coefficients
    h_mo = c.T @ res.h_core @ c
    eri_mo = np.einsum("pqrs,pi,qj,rk,sl->ijkl", res.eri_ao, c, c, c, c, optimize=True)
    return h_mo, eri_mo
