"""Exact linear flows and closed-form solutions.

The modified dispersive-parabolic semigroup multiplies mode k by
e^{-i k^2 t - mu |k| |t|}; the |t| makes it contractive in both time
directions.  The reduced equation

    d_t u = i d_x^2 u + (alpha/pi)||u0||^2 d_x u + (beta/2pi)||u0||^2 D_x u

is diagonal in Fourier and solved exactly by
u_hat(t,k) = e^{-i k^2 t + omega(k) ||u0||^2 t} u0_hat(k) with
omega(k) = i(alpha/pi) k + (beta/2pi)|k|.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import pi

import numpy as np

from .spectral import TWO_PI, ConfigurationError, SpectralField, l2_norm_sq


@dataclass(frozen=True)
class ReducedSymbol:
    """Per-mode growth rates omega(k) = i(alpha/pi) k + (beta/2pi)|k|."""

    alpha: float
    beta: float

    def values(self, modes: np.ndarray) -> np.ndarray:
        k = np.asarray(modes, dtype=float)
        return 1j * (self.alpha / pi) * k + (self.beta / TWO_PI) * np.abs(k)


def compute_mu(u0: SpectralField, beta: float, experiment_mode: bool = False) -> float:
    """mu = |beta| * ||u0||_{L^2}^2 / (2pi).

    The dissipative solver path needs beta < 0; beta >= 0 is allowed only
    with experiment_mode=True.
    """
    if beta >= 0.0 and not experiment_mode:
        raise ConfigurationError(
            f"beta={beta} is non-dissipative; pass experiment_mode=True to allow it"
        )
    return abs(beta) * l2_norm_sq(u0) / TWO_PI


def semigroup_factors(modes: np.ndarray, t: float, mu: float) -> np.ndarray:
    """e^{-i k^2 t - mu |k| |t|} for each mode."""
    k = np.asarray(modes, dtype=float)
    return np.exp(-1j * k**2 * t - mu * np.abs(k) * abs(t))


def apply_semigroup(field: SpectralField, t: float, mu: float) -> SpectralField:
    """Modified evolution operator: decay factor e^{-mu|k||t|} in both time directions."""
    if mu < 0.0:
        raise ConfigurationError(f"mu must be >= 0, got {mu}")
    return SpectralField(field.grid, field.coeffs * semigroup_factors(field.grid.modes, t, mu))


def reduced_exact_solution(
    u0: SpectralField, t: float, alpha: float, beta: float
) -> SpectralField:
    """Exact solution of the reduced equation at time t.

    For beta < 0 and t < 0 the factor e^{omega(k)||u0||^2 t} grows; backward
    evaluation is permitted but not contractive.
    """
    omega = ReducedSymbol(alpha, beta).values(u0.grid.modes)
    k = u0.grid.modes.astype(float)
    factors = np.exp((-1j * k**2 + omega * l2_norm_sq(u0)) * t)
    return SpectralField(u0.grid, u0.coeffs * factors)


def single_mode_exact(c: complex, k: int, t: float, alpha: float) -> complex:
    """Orthonormal coefficient at time t for initial data (1/sqrt(2pi)) c e^{ikx}.

    |u|^2 is constant for one-mode data, so the Hilbert-transform term
    vanishes (sgn(0) = 0) and the solution is an exact phase rotation:
    c e^{-i k^2 t + i alpha (|c|^2/2pi) k t}.
    """
    return c * np.exp(-1j * k**2 * t + 1j * alpha * (abs(c) ** 2 / TWO_PI) * k * t)


def gauge_translate(field: SpectralField, nu: float, t: float) -> SpectralField:
    """Spatial translation x -> x - nu*t as the phase modulation u_hat(k) -> e^{-ik nu t} u_hat(k).

    Modulus-preserving, so every Sobolev norm is unchanged; the inverse is
    gauge_translate(. , -nu, t).
    """
    k = field.grid.modes.astype(float)
    return SpectralField(field.grid, field.coeffs * np.exp(-1j * k * nu * t))
