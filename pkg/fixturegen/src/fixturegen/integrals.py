"""One- and two-electron integrals over contracted Cartesian Gaussians
(McMurchie-Davidson scheme, Boys function via the confluent hypergeometric
series).  Only s and p functions are needed for STO-3G H/Li/Be/N."""

from __future__ import annotations

import numpy as np
from scipy.special import hyp1f1


def _hermite_e(i: int, j: int, t: int, q_x: float, a: float, b: float) -> float:
    """Hermite expansion coefficient E_t^{ij} for a Gaussian product."""
    p = a + b
    q = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return float(np.exp(-q * q_x * q_x))
    if j == 0:
        return (
            _hermite_e(i - 1, j, t - 1, q_x, a, b) / (2 * p)
            - q * q_x / a * _hermite_e(i - 1, j, t, q_x, a, b)
            + (t + 1) * _hermite_e(i - 1, j, t + 1, q_x, a, b)
        )
    return (
        _hermite_e(i, j - 1, t - 1, q_x, a, b) / (2 * p)
        + q * q_x / b * _hermite_e(i, j - 1, t, q_x, a, b)
        + (t + 1) * _hermite_e(i, j - 1, t + 1, q_x, a, b)
    )


def overlap_primitive(a, lmn1, A, b, lmn2, B) -> float:
    s = 1.0
    for d in range(3):
        s *= _hermite_e(lmn1[d], lmn2[d], 0, A[d] - B[d], a, b)
    return s * (np.pi / (a + b)) ** 1.5


def kinetic_primitive(a, lmn1, A, b, lmn2, B) -> float:
    l2, m2, n2 = lmn2

    def ov(lmn):
        return overlap_primitive(a, lmn1, A, b, lmn, B)

    term0 = b * (2 * (l2 + m2 + n2) + 3) * ov((l2, m2, n2))
    term1 = -2 * b**2 * (ov((l2 + 2, m2, n2)) + ov((l2, m2 + 2, n2)) + ov((l2, m2, n2 + 2)))
    term2 = -0.5 * (
        l2 * (l2 - 1) * ov((l2 - 2, m2, n2))
        + m2 * (m2 - 1) * ov((l2, m2 - 2, n2))
        + n2 * (n2 - 1) * ov((l2, m2, n2 - 2))
    )
    return term0 + term1 + term2


def boys(n: int, t: float) -> float:
    return float(hyp1f1(n + 0.5, n + 1.5, -t)) / (2 * n + 1)


def _hermite_coulomb(t, u, v, n, p, pc, r2) -> float:
    if t == u == v == 0:
        return (-2 * p) ** n * boys(n, p * r2)
    if t > 0:
        val = _hermite_coulomb(t - 1, u, v, n + 1, p, pc, r2) * pc[0]
        if t > 1:
            val += (t - 1) * _hermite_coulomb(t - 2, u, v, n + 1, p, pc, r2)
        return val
    if u > 0:
        val = _hermite_coulomb(t, u - 1, v, n + 1, p, pc, r2) * pc[1]
        if u > 1:
            val += (u - 1) * _hermite_coulomb(t, u - 2, v, n + 1, p, pc, r2)
        return val
    val = _hermite_coulomb(t, u, v - 1, n + 1, p, pc, r2) * pc[2]
    if v > 1:
        val += (v - 1) * _hermite_coulomb(t, u, v - 2, n + 1, p, pc, r2)
    return val


def nuclear_primitive(a, lmn1, A, b, lmn2, B, C) -> float:
    p = a + b
    P = (a * np.asarray(A) + b * np.asarray(B)) / p
    pc = P - np.asarray(C)
    r2 = float(pc @ pc)
    val = 0.0
    for t in range(lmn1[0] + lmn2[0] + 1):
        et = _hermite_e(lmn1[0], lmn2[0], t, A[0] - B[0], a, b)
        for u in range(lmn1[1] + lmn2[1] + 1):
            eu = _hermite_e(lmn1[1], lmn2[1], u, A[1] - B[1], a, b)
            for v in range(lmn1[2] + lmn2[2] + 1):
                ev = _hermite_e(lmn1[2], lmn2[2], v, A[2] - B[2], a, b)
                val += et * eu * ev * _hermite_coulomb(t, u, v, 0, p, pc, r2)
    return 2 * np.pi / p * val


def eri_primitive(a, lmn1, A, b, lmn2, B, c, lmn3, C, d, lmn4, D) -> float:
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    P = (a * np.asarray(A) + b * np.asarray(B)) / p
    Q = (c * np.asarray(C) + d * np.asarray(D)) / q
    pq = P - Q
    r2 = float(pq @ pq)

    e1 = [
        [_hermite_e(lmn1[d_], lmn2[d_], t, A[d_] - B[d_], a, b) for t in range(lmn1[d_] + lmn2[d_] + 1)]
        for d_ in range(3)
    ]
    e2 = [
        [_hermite_e(lmn3[d_], lmn4[d_], t, C[d_] - D[d_], c, d) for t in range(lmn3[d_] + lmn4[d_] + 1)]
        for d_ in range(3)
    ]

    val = 0.0
    for t in range(len(e1[0])):
        for u in range(len(e1[1])):
            for v in range(len(e1[2])):
                ce1 = e1[0][t] * e1[1][u] * e1[2][v]
                if ce1 == 0.0:
                    continue
                for tau in range(len(e2[0])):
                    for nu in range(len(e2[1])):
                        for phi in range(len(e2[2])):
                            ce2 = e2[0][tau] * e2[1][nu] * e2[2][phi]
                            if ce2 == 0.0:
                                continue
                            sgn = (-1) ** (tau + nu + phi)
                            val += ce1 * ce2 * sgn * _hermite_coulomb(
                                t + tau, u + nu, v + phi, 0, alpha, pq, r2
                            )
    return val * 2 * np.pi**2.5 / (p * q * np.sqrt(p + q))


def overlap_matrix(basis) -> np.ndarray:
    n = len(basis)
    s = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            gi, gj = basis[i], basis[j]
            val = 0.0
            for a, ca in zip(gi.exponents, gi.coefficients):
                for b, cb in zip(gj.exponents, gj.coefficients):
                    val += ca * cb * overlap_primitive(a, gi.lmn, gi.center, b, gj.lmn, gj.center)
            s[i, j] = s[j, i] = val
    return s


def kinetic_matrix(basis) -> np.ndarray:
    n = len(basis)
    t = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            gi, gj = basis[i], basis[j]
            val = 0.0
            for a, ca in zip(gi.exponents, gi.coefficients):
                for b, cb in zip(gj.exponents, gj.coefficients):
                    val += ca * cb * kinetic_primitive(a, gi.lmn, gi.center, b, gj.lmn, gj.center)
            t[i, j] = t[j, i] = val
    return t


def nuclear_matrix(basis, molecule) -> np.ndarray:
    from .basis import ATOMIC_NUMBER

    n = len(basis)
    v = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            gi, gj = basis[i], basis[j]
            val = 0.0
            for sym, center in zip(molecule.symbols, molecule.coords_bohr):
                z = ATOMIC_NUMBER[sym]
                for a, ca in zip(gi.exponents, gi.coefficients):
                    for b, cb in zip(gj.exponents, gj.coefficients):
                        val -= z * ca * cb * nuclear_primitive(
                            a, gi.lmn, gi.center, b, gj.lmn, gj.center, center
                        )
            v[i, j] = v[j, i] = val
    return v


def eri_tensor(basis) -> np.ndarray:
    """Chemists'-notation (ij|kl) tensor with 8-fold symmetry."""
    n = len(basis)
    eri = np.zeros((n, n, n, n))
    done = set()
    for i in range(n):
        for j in range(i + 1):
            for k in range(n):
                for l in range(k + 1):
                    key = min((i, j, k, l), (k, l, i, j))
                    if key in done:
                        continue
                    done.add(key)
                    gi, gj, gk, gl = basis[i], basis[j], basis[k], basis[l]
                    val = 0.0
                    for a, ca in zip(gi.exponents, gi.coefficients):
                        for b, cb in zip(gj.exponents, gj.coefficients):
                            for c, cc in zip(gk.exponents, gk.coefficients):
                                for d, cd in zip(gl.exponents, gl.coefficients):
                                    val += ca * cb * cc * cd * eri_primitive(
                                        a, gi.lmn, gi.center, b, gj.lmn, gj.center,
                                        c, gk.lmn, gk.center, d, gl.lmn, gl.center,
                                    )
                    for p, q in ((i, j), (j, i)):
                        for r, s in ((k, l), (l, k)):
                            eri[p, q, r, s] = val
                            eri[r, s, p, q] = val
    return eri
