"""Initial-data constructors shared by experiments and tests."""

from __future__ import annotations

import numpy as np

from .spectral import GridSpec, SpectralField, sobolev_norm


def single_mode(grid: GridSpec, k: int, c: complex) -> SpectralField:
    """u = (1/sqrt(2pi)) c e^{ikx}, i.e. orthonormal coefficient c at mode k."""
    return SpectralField.from_modes(grid, {k: c / np.sqrt(2.0 * np.pi)})


def two_mode(grid: GridSpec, a0: complex, b0: complex, N: int) -> SpectralField:
    """u = (1/sqrt(2pi)) (a0 + b0 e^{iNx})."""
    root = np.sqrt(2.0 * np.pi)
    return SpectralField.from_modes(grid, {0: a0 / root, N: b0 / root})


def power_law_field(
    grid: GridSpec,
    decay: float,
    norm_s: float,
    norm_value: float,
    rng: np.random.Generator,
) -> SpectralField:
    """Random-phase field with |u_hat(k)| ~ <k>^{-decay}, scaled to a target H^s norm."""
    k = grid.modes.astype(float)
    profile = (1.0 + k**2) ** (-decay / 2.0)
    phases = np.exp(2j * np.pi * rng.random(len(k)))
    field = SpectralField(grid, profile * phases)
    scale = norm_value / sobolev_norm(field, norm_s)
    return SpectralField(grid, field.coeffs * scale)


def gevrey_field(
    grid: GridSpec, amplitude: float, rng: np.random.Generator
) -> SpectralField:
    """Analytic-class data |u_hat(k)| = amplitude * e^{-|k|} with random phases."""
    k = grid.modes
    profile = amplitude * np.exp(-np.abs(k).astype(float))
    phases = np.exp(2j * np.pi * rng.random(len(k)))
    return SpectralField(grid, profile * phases)


def random_field(
    grid: GridSpec, rng: np.random.Generator, scale: float = 1.0
) -> SpectralField:
    """Dense complex Gaussian coefficients (test fodder, no smoothness)."""
    n = 2 * grid.K + 1
    c = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return SpectralField(grid, scale * c)
