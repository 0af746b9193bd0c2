"""Determinant-basis full CI via Slater-Condon rules.

Works in the Sz = 0 sector with determinants encoded as (alpha, beta)
occupation bitmasks over spatial orbitals.  Independent of any qubit
mapping; used only to record reference energies in fixture sidecars.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np


def _bits(mask: int, n: int):
    return [p for p in range(n) if mask >> p & 1]


def _excitation_sign(mask: int, p: int, q: int) -> float:
    """Sign of a_q^+ a_p acting on |mask> (p occupied, q empty)."""
    lo, hi = (p, q) if p < q else (q, p)
    between = mask & (((1 << hi) - 1) ^ ((1 << (lo + 1)) - 1))
    return -1.0 if bin(between).count("1") % 2 else 1.0


class _SectorHamiltonian:
    def __init__(self, h1: np.ndarray, eri: np.ndarray, n_alpha: int, n_beta: int):
        self.h1 = h1
        self.eri = eri  # chemists' (ij|kl)
        n = h1.shape[0]
        self.n = n
        alphas = [sum(1 << p for p in occ) for occ in combinations(range(n), n_alpha)]
        betas = [sum(1 << p for p in occ) for occ in combinations(range(n), n_beta)]
        self.dets = [(a, b) for a in alphas for b in betas]
        self.index = {d: i for i, d in enumerate(self.dets)}

    # -- Slater-Condon matrix elements over spatial integrals ---------------
    def _coulomb(self, p, q):  # (pp|qq)
        return self.eri[p, p, q, q]

    def _exchange(self, p, q):  # (pq|qp)
        return self.eri[p, q, q, p]

    def diagonal(self, det) -> float:
        a, b = det
        occ_a, occ_b = _bits(a, self.n), _bits(b, self.n)
        e = sum(self.h1[p, p] for p in occ_a) + sum(self.h1[p, p] for p in occ_b)
        for i, p in enumerate(occ_a):
            for q in occ_a[:i]:
                e += self._coulomb(p, q) - self._exchange(p, q)
        for i, p in enumerate(occ_b):
            for q in occ_b[:i]:
                e += self._coulomb(p, q) - self._exchange(p, q)
        for p in occ_a:
            for q in occ_b:
                e += self._coulomb(p, q)
        return e

    def build(self) -> np.ndarray:
        dim = len(self.dets)
        h = np.zeros((dim, dim))
        eri, h1 = self.eri, self.h1
        for col, (a, b) in enumerate(self.dets):
            h[col, col] = self.diagonal((a, b))
            occ_a, occ_b = _bits(a, self.n), _bits(b, self.n)
            vir_a = [p for p in range(self.n) if not a >> p & 1]
            vir_b = [p for p in range(self.n) if not b >> p & 1]

            # single excitations, same spin
            for occ, vir, mask, other_occ, is_alpha in (
                (occ_a, vir_a, a, occ_b, True),
                (occ_b, vir_b, b, occ_a, False),
            ):
                for p in occ:
                    for q in vir:
                        sgn = _excitation_sign(mask, p, q)
                        val = h1[p, q]
                        for r in occ:
                            if r != p:
                                val += eri[p, q, r, r] - eri[p, r, r, q]
                        for r in other_occ:
                            val += eri[p, q, r, r]
                        new = mask ^ (1 << p) ^ (1 << q)
                        row = self.index[(new, b) if is_alpha else (a, new)]
                        h[row, col] = sgn * val

            # double excitations within one spin
            for occ, vir, mask, is_alpha in (
                (occ_a, vir_a, a, True),
                (occ_b, vir_b, b, False),
            ):
                for p, q in combinations(occ, 2):
                    for r, s in combinations(vir, 2):
                        # <pq||rs> = (pr|qs) - (ps|qr), with sign from two hops
                        m1 = mask ^ (1 << p) ^ (1 << r)
                        sgn = _excitation_sign(mask, p, r) * _excitation_sign(m1, q, s)
                        val = eri[p, r, q, s] - eri[p, s, q, r]
                        new = m1 ^ (1 << q) ^ (1 << s)
                        row = self.index[(new, b) if is_alpha else (a, new)]
                        h[row, col] = sgn * val

            # opposite-spin doubles
            for p in occ_a:
                for r in vir_a:
                    sa = _excitation_sign(a, p, r)
                    na = a ^ (1 << p) ^ (1 << r)
                    for q in occ_b:
                        for s in vir_b:
                            sb = _excitation_sign(b, q, s)
                            nb = b ^ (1 << q) ^ (1 << s)
                            row = self.index[(na, nb)]
                            h[row, col] = sa * sb * eri[p, r, q, s]
        return h


def fci_ground_energy(h1: np.ndarray, eri: np.ndarray, n_electrons: int,
                      core_energy: float = 0.0) -> float:
    """Lowest Sz=0 FCI eigenvalue for the given spatial-orbital integrals."""
    if n_electrons % 2:
        raise ValueError("Sz=0 sector requires an even electron count")
    ham = _SectorHamiltonian(h1, eri, n_electrons // 2, n_electrons // 2)
    m = ham.build()
    if not np.allclose(m, m.T, atol=1e-9):
        raise AssertionError("FCI matrix is not symmetric; Slater-Condon bug")
    return float(np.linalg.eigvalsh(m)[0] + core_energy)
