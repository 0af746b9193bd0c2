"""Numba kernels for Pauli-string action on dense statevectors.

A Pauli string is stored symplectically as an (x_mask, z_mask) pair of
machine words.  Its action on a computational basis state is

    P |b> = i^y * (-1)^parity(b & z_mask) |b ^ x_mask>,   y = popcount(x & z),

so every kernel below is a single O(2^n) pass per string.  The i^y factor
is folded into the coefficient by the callers (see ``PauliSum.packed``).
"""

from __future__ import annotations

import numpy as np
from numba import njit

# 16-bit parity lookup, xor-folded for 64-bit masks.
_v = np.arange(65536, dtype=np.uint32)
_v = _v ^ (_v >> 8)
_v = _v ^ (_v >> 4)
_v = _v ^ (_v >> 2)
_v = _v ^ (_v >> 1)
PARITY16 = (_v & 1).astype(np.int64)
del _v


@njit(cache=True, inline="always")
def _parity(v):
    return (
        PARITY16[v & 0xFFFF]
        ^ PARITY16[(v >> 16) & 0xFFFF]
        ^ PARITY16[(v >> 32) & 0xFFFF]
        ^ PARITY16[(v >> 48) & 0xFFFF]
    )


@njit(cache=True)
def apply_term(state, x_mask, z_mask, coeff):
    """Return coeff * P state (coeff must already include the i^y factor)."""
    out = np.empty_like(state)
    for y in range(state.shape[0]):
        b = y ^ x_mask
        sgn = 1.0 - 2.0 * _parity(b & z_mask)
        out[y] = coeff * sgn * state[b]
    return out


@njit(cache=True)
def sum_apply(state, x_masks, z_masks, coeffs):
    """Return (sum_t coeffs[t] * P_t) state."""
    out = np.zeros_like(state)
    for t in range(x_masks.shape[0]):
        xm = x_masks[t]
        zm = z_masks[t]
        c = coeffs[t]
        for y in range(state.shape[0]):
            b = y ^ xm
            sgn = 1.0 - 2.0 * _parity(b & zm)
            out[y] += c * sgn * state[b]
    return out


@njit(cache=True)
def sum_expectation(state, x_masks, z_masks, coeffs):
    """Return <state| sum_t coeffs[t] P_t |state> without materializing matrices."""
    total = 0.0 + 0.0j
    for t in range(x_masks.shape[0]):
        xm = x_masks[t]
        zm = z_masks[t]
        acc = 0.0 + 0.0j
        for y in range(state.shape[0]):
            b = y ^ xm
            sgn = 1.0 - 2.0 * _parity(b & zm)
            acc += np.conj(state[y]) * sgn * state[b]
        total += coeffs[t] * acc
    return total


@njit(cache=True)
def rotate_inplace(state, x_mask, z_mask, phase, cos_a, sin_a):
    """In-place state <- cos(a)*state + i*sin(a) * P state.

    ``phase`` is the i^y factor of the (unit-coefficient) string P.
    """
    isin = 1j * sin_a
    if x_mask == 0:
        for y in range(state.shape[0]):
            sgn = 1.0 - 2.0 * _parity(y & z_mask)
            state[y] = (cos_a + isin * phase * sgn) * state[y]
    else:
        for y in range(state.shape[0]):
            p = y ^ x_mask
            if p < y:
                continue
            sgn_y = 1.0 - 2.0 * _parity(y & z_mask)
            sgn_p = 1.0 - 2.0 * _parity(p & z_mask)
            ay = state[y]
            ap = state[p]
            state[y] = cos_a * ay + isin * phase * sgn_p * ap
            state[p] = cos_a * ap + isin * phase * sgn_y * ay
