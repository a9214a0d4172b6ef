"""Grid, transforms, Fourier multipliers, and Sobolev norms for 2*pi-periodic fields.

Coefficients follow the convention

    u_hat(k) = (1/2pi) int_0^{2pi} e^{-ikx} u(x) dx,  |k| <= K,

so that u(x) = sum_k u_hat(k) e^{ikx} and products of coefficient arrays are
plain convolutions.  Norms are taken against the orthonormal basis
e^{ikx}/sqrt(2pi), i.e. with coefficients c_k = sqrt(2pi) * u_hat(k):

    ||u||_{H^s}^2 = sum_k (1 + k^2)^s |c_k|^2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.fft import next_fast_len

TWO_PI = 2.0 * np.pi


class ConfigurationError(ValueError):
    """Inconsistent grid, shape, or solver configuration."""


def default_grid_size(num_modes: int) -> int:
    """FFT-friendly physical grid size for max mode K = num_modes.

    Returns the smallest 5-smooth integer >= 4(K+1).  Any M >= 4K+1 makes
    cubic products exact: a product of three degree-K trigonometric
    polynomials has degree 3K, and no mode |k'| <= 3K can alias onto
    |k| <= K when M > 4K.
    """
    return int(next_fast_len(4 * (num_modes + 1)))


@dataclass(frozen=True)
class GridSpec:
    """Spectral truncation |k| <= K with an M-point physical grid (M >= 4K+1)."""

    K: int
    M: int = 0  # 0 -> default_grid_size(K)

    def __post_init__(self) -> None:
        if self.K < 1:
            raise ConfigurationError(f"K must be >= 1, got {self.K}")
        if self.M == 0:
            object.__setattr__(self, "M", default_grid_size(self.K))
        if self.M < 4 * self.K + 1:
            raise ConfigurationError(
                f"M={self.M} is too small for exact cubic dealiasing at K={self.K} "
                f"(need M >= {4 * self.K + 1})"
            )

    @property
    def modes(self) -> np.ndarray:
        """Integer wavenumbers -K..K in coefficient-array order."""
        return np.arange(-self.K, self.K + 1)

    @property
    def nodes(self) -> np.ndarray:
        """Physical collocation points x_j = 2*pi*j/M."""
        return TWO_PI * np.arange(self.M) / self.M


@dataclass(frozen=True)
class SpectralField:
    """Immutable complex Fourier coefficients u_hat(k), k = -K..K."""

    grid: GridSpec
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        c = np.asarray(self.coeffs, dtype=np.complex128)
        if c.shape != (2 * self.grid.K + 1,):
            raise ConfigurationError(
                f"coefficient array has shape {c.shape}, expected ({2 * self.grid.K + 1},)"
            )
        if not np.all(np.isfinite(c)):
            raise ConfigurationError("coefficient array contains non-finite entries")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, grid: GridSpec) -> "SpectralField":
        return cls(grid, np.zeros(2 * grid.K + 1, dtype=np.complex128))

    @classmethod
    def from_modes(cls, grid: GridSpec, amplitudes: dict[int, complex]) -> "SpectralField":
        """Field with u_hat(k) = amplitudes[k], zero elsewhere."""
        c = np.zeros(2 * grid.K + 1, dtype=np.complex128)
        for k, a in amplitudes.items():
            if abs(k) > grid.K:
                raise ConfigurationError(f"mode {k} outside |k| <= {grid.K}")
            c[k + grid.K] = a
        return cls(grid, c)

    def coeff(self, k: int) -> complex:
        """u_hat(k)."""
        if abs(k) > self.grid.K:
            return 0.0 + 0.0j
        return complex(self.coeffs[k + self.grid.K])

    def __add__(self, other: "SpectralField") -> "SpectralField":
        _check_same_grid(self, other)
        return SpectralField(self.grid, self.coeffs + other.coeffs)

    def __sub__(self, other: "SpectralField") -> "SpectralField":
        _check_same_grid(self, other)
        return SpectralField(self.grid, self.coeffs - other.coeffs)

    def __mul__(self, scalar: complex) -> "SpectralField":
        return SpectralField(self.grid, self.coeffs * scalar)

    __rmul__ = __mul__


def _check_same_grid(a: SpectralField, b: SpectralField) -> None:
    if a.grid != b.grid:
        raise ConfigurationError(f"grid mismatch: {a.grid} vs {b.grid}")


class MultiplierSymbol(enum.Enum):
    """Diagonal Fourier multipliers.  sgn(0) = 0 throughout."""

    DERIVATIVE = "derivative"          # ik
    ABS_DERIVATIVE = "abs_derivative"  # |k|
    HALF_DERIVATIVE = "half_derivative"  # |k|^{1/2}
    HILBERT = "hilbert"                # -i sgn(k)


def multiplier_values(symbol: MultiplierSymbol, modes: np.ndarray) -> np.ndarray:
    k = np.asarray(modes)
    if symbol is MultiplierSymbol.DERIVATIVE:
        return 1j * k.astype(np.complex128)
    if symbol is MultiplierSymbol.ABS_DERIVATIVE:
        return np.abs(k).astype(np.complex128)
    if symbol is MultiplierSymbol.HALF_DERIVATIVE:
        return np.sqrt(np.abs(k)).astype(np.complex128)
    if symbol is MultiplierSymbol.HILBERT:
        return -1j * np.sign(k).astype(np.complex128)
    raise ConfigurationError(f"unknown multiplier symbol {symbol!r}")


def spectral_coeffs(grid: GridSpec, samples: np.ndarray) -> np.ndarray:
    """Unvalidated array path of to_spectral (hot loops, may carry non-finite data)."""
    spectrum = np.fft.fft(samples) / grid.M
    return spectrum[grid.modes % grid.M]


def physical_values(grid: GridSpec, coeffs: np.ndarray) -> np.ndarray:
    """Unvalidated array path of to_physical."""
    spectrum = np.zeros(grid.M, dtype=np.complex128)
    spectrum[grid.modes % grid.M] = coeffs
    return np.fft.ifft(spectrum) * grid.M


def to_spectral(grid: GridSpec, samples: np.ndarray) -> SpectralField:
    """DFT of M physical samples, truncated to |k| <= K.

    u_hat(k) = (1/M) sum_j e^{-ik x_j} u(x_j), exact for band-limited data.
    """
    samples = np.asarray(samples, dtype=np.complex128)
    if samples.shape != (grid.M,):
        raise ConfigurationError(
            f"sample array has length {samples.shape}, expected ({grid.M},)"
        )
    return SpectralField(grid, spectral_coeffs(grid, samples))


def to_physical(field: SpectralField) -> np.ndarray:
    """u(x_j) = sum_{|k| <= K} u_hat(k) e^{ik x_j} on the M-point grid."""
    return physical_values(field.grid, field.coeffs)


def apply_multiplier(field: SpectralField, symbol: MultiplierSymbol) -> SpectralField:
    """Coefficientwise product with the multiplier symbol."""
    values = multiplier_values(symbol, field.grid.modes)
    return SpectralField(field.grid, field.coeffs * values)


def sobolev_norm(field: SpectralField, s: float) -> float:
    """H^s norm: (sum_k <k>^{2s} |c_k|^2)^{1/2} with c_k = sqrt(2pi) u_hat(k).

    s = 0 gives the L^2 norm.
    """
    if not np.isfinite(s):
        raise ConfigurationError(f"s must be finite, got {s}")
    k = field.grid.modes
    weights = (1.0 + k.astype(float) ** 2) ** s
    return float(np.sqrt(TWO_PI * np.sum(weights * np.abs(field.coeffs) ** 2)))


def l2_norm_sq(field: SpectralField) -> float:
    """||u||_{L^2}^2 = 2pi sum_k |u_hat(k)|^2."""
    return float(TWO_PI * np.sum(np.abs(field.coeffs) ** 2))


def extended_product_coeffs(
    grid: GridSpec, ca: np.ndarray, cb: np.ndarray, conjugate_b: bool = False
) -> np.ndarray:
    """Unvalidated array path of dealiased_product."""
    pa = physical_values(grid, ca)
    pb = physical_values(grid, cb)
    if conjugate_b:
        pb = np.conj(pb)
    spectrum = np.fft.fft(pa * pb) / grid.M
    ext_modes = np.arange(-2 * grid.K, 2 * grid.K + 1)
    return spectrum[ext_modes % grid.M]


def dealiased_product(
    a: SpectralField, b: SpectralField, conjugate_b: bool = False
) -> np.ndarray:
    """Coefficients of a*b (or a*conj(b)) on the extended band |m| <= 2K.

    Computed as a pointwise physical product on the M-point grid; exact
    (no aliasing) for |m| <= 2K since M >= 4K+1.  Returns a plain array of
    length 4K+1 indexed by m + 2K.
    """
    _check_same_grid(a, b)
    return extended_product_coeffs(a.grid, a.coeffs, b.coeffs, conjugate_b)


def dissipation_rate(field: SpectralField) -> float:
    """||D_x^{1/2}(|u|^2)||_{L^2}^2 = sum_m |m| |c_m(|u|^2)|^2.

    |u|^2 is a degree-2K trigonometric polynomial and is computed exactly
    via the dealiased product.
    """
    w = dealiased_product(field, field, conjugate_b=True)
    m = np.arange(-2 * field.grid.K, 2 * field.grid.K + 1)
    return float(TWO_PI * np.sum(np.abs(m) * np.abs(w) ** 2))
