"""Slow direct-summation implementations used as oracles.

Everything here evaluates the defining sums literally (O(K^2) convolutions,
O(K^3) constrained triple sums) without FFTs or prefix-sum tricks, so the
fast paths can be checked against an independent route.  Do not use these in
the solver.
"""

from __future__ import annotations

from math import pi

import numpy as np

from .spectral import TWO_PI, SpectralField


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def convolve_direct(
    a: np.ndarray, b: np.ndarray, K: int, conjugate_b: bool = False
) -> np.ndarray:
    """sum_{k1+k2=m} a(k1) b(k2) (or sum_{k1-k2=m} a(k1) conj(b(k2))) for |m| <= 2K.

    np.convolve performs the literal direct summation.
    """
    if conjugate_b:
        b = np.conj(b)[::-1]
    return np.convolve(a, b)


def dissipation_rate_direct(field: SpectralField) -> float:
    """sum_m |m| |c_m(|u|^2)|^2 via the direct convolution for |u|^2."""
    K = field.grid.K
    w = convolve_direct(field.coeffs, field.coeffs, K, conjugate_b=True)
    m = np.arange(-2 * K, 2 * K + 1)
    return float(TWO_PI * np.sum(np.abs(m) * np.abs(w) ** 2))


def n1_direct(
    u: SpectralField, v_l2_sq: float, u3: SpectralField, alpha: float, beta: float
) -> np.ndarray:
    """(||u||^2 - v_l2_sq)((alpha/pi) ik + (beta/2pi)|k|) u3^(k), norm resummed."""
    u_l2_sq = TWO_PI * sum(abs(c) ** 2 for c in u.coeffs)
    K = u3.grid.K
    out = np.zeros(2 * K + 1, dtype=np.complex128)
    for k in range(-K, K + 1):
        symbol = alpha / pi * 1j * k + beta / TWO_PI * abs(k)
        out[k + K] = (u_l2_sq - v_l2_sq) * symbol * u3.coeffs[k + K]
    return out


def n2_direct(
    u1: SpectralField,
    u2: SpectralField,
    u3: SpectralField,
    alpha: float,
    beta: float,
) -> np.ndarray:
    """Literal double sum over (k, k') of the diagonal + tail-bracket term."""
    K = u1.grid.K
    c1, c2, c3 = u1.coeffs, u2.coeffs, u3.coeffs
    out = np.zeros(2 * K + 1, dtype=np.complex128)
    for k in range(-K, K + 1):
        bracket = 0.0 + 0.0j
        for kp in range(-K, K + 1):
            weight = k * (_sgn(k - kp) - _sgn(k))
            bracket += weight * c1[kp + K] * np.conj(c2[kp + K])
        diag = -1j * alpha * k * c1[k + K] * np.conj(c2[k + K]) * c3[k + K]
        out[k + K] = diag + beta * bracket * c3[k + K]
    return out


def n3_direct(
    u1: SpectralField,
    u2: SpectralField,
    u3: SpectralField,
    alpha: float,
    beta: float,
) -> np.ndarray:
    """Literal constrained triple sum, k2 distinct from k1 and k3.

    The (k1, k2) pairs are enumerated one by one; only the innermost k3 index
    is vectorized (output modes for fixed (k1, k2) are distinct, so plain
    fancy-index accumulation is exact).
    """
    K = u1.grid.K
    c1, c2, c3 = u1.coeffs, u2.coeffs, u3.coeffs
    k3 = np.arange(-K, K + 1)
    out = np.zeros(2 * K + 1, dtype=np.complex128)
    for k1 in range(-K, K + 1):
        for k2 in range(-K, K + 1):
            if k2 == k1:
                continue
            factor = (alpha - 1j * beta * _sgn(k1 - k2)) * c1[k1 + K] * np.conj(c2[k2 + K])
            k_out = k1 - k2 + k3
            keep = (np.abs(k_out) <= K) & (k3 != k2)
            out[k_out[keep] + K] += 1j * k_out[keep] * factor * c3[k3[keep] + K]
    return out


def full_nonlinearity_direct(u: SpectralField, alpha: float, beta: float) -> np.ndarray:
    """Unconstrained triple sum ik [alpha - i beta sgn(k1-k2)] u^ conj(u^) u^."""
    K = u.grid.K
    c = u.coeffs
    k3 = np.arange(-K, K + 1)
    out = np.zeros(2 * K + 1, dtype=np.complex128)
    for k1 in range(-K, K + 1):
        for k2 in range(-K, K + 1):
            factor = (alpha - 1j * beta * _sgn(k1 - k2)) * c[k1 + K] * np.conj(c[k2 + K])
            k_out = k1 - k2 + k3
            keep = np.abs(k_out) <= K
            out[k_out[keep] + K] += 1j * k_out[keep] * factor * c[k3[keep] + K]
    return out
