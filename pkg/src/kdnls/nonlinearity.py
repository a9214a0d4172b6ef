"""The cubic nonlinearity alpha*d_x(|u|^2 u) + beta*d_x[H(|u|^2) u] and its
exact resonant/nonresonant decomposition.

With the convolution convention of :mod:`kdnls.spectral`, the full
nonlinearity at output mode k is

    ik * sum_{k1-k2+k3=k} [alpha - i*beta*sgn(k1-k2)] u1^(k1) conj(u2^)(k2) u3^(k3)

(u1 = u2 = u3 = u).  Splitting off the k2 = k1 and k2 = k3 diagonals and the
L^2 mass of the initial data rewrites it identically as

    (alpha/pi)||u0||^2 d_x u  +  (beta/2pi)||u0||^2 D_x u
        + N1[u, u0; u] + N2[u, u, u] + N3[u, u, u],

which is the form the solver integrates.  All products are evaluated with
exact dealiasing, so the rewriting holds to rounding error on the grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import pi

import numpy as np

from .spectral import (
    TWO_PI,
    ConfigurationError,
    GridSpec,
    SpectralField,
    extended_product_coeffs,
    l2_norm_sq,
    physical_values,
    spectral_coeffs,
    _check_same_grid,
)

_MAX_RESONANCE_ARG = 2**30


@dataclass(frozen=True)
class EquationParams:
    """Equation coefficients plus the initial-data quantities derived from them.

    mu = |beta| * ||u0||_{L^2}^2 / (2pi) is the strength of the effective
    linear damping term; it is stored explicitly and cross-checked against
    its inputs.
    """

    alpha: float
    beta: float
    u0_l2_sq: float
    mu: float = None  # type: ignore[assignment]  # None -> derived

    def __post_init__(self) -> None:
        if self.u0_l2_sq < 0.0:
            raise ConfigurationError(f"u0_l2_sq must be >= 0, got {self.u0_l2_sq}")
        expected = abs(self.beta) * self.u0_l2_sq / TWO_PI
        if self.mu is None:
            object.__setattr__(self, "mu", expected)
        elif abs(self.mu - expected) > 1e-15 * max(1.0, expected):
            raise ConfigurationError(
                f"mu={self.mu} inconsistent with |beta|*u0_l2_sq/(2pi)={expected}"
            )

    @classmethod
    def for_initial_data(
        cls,
        alpha: float,
        beta: float,
        u0: SpectralField,
        experiment_mode: bool = False,
    ) -> "EquationParams":
        """Parameters for given initial data.  beta >= 0 requires experiment_mode."""
        if beta >= 0.0 and not experiment_mode:
            raise ConfigurationError(
                f"beta={beta} is non-dissipative; pass experiment_mode=True to allow it"
            )
        return cls(alpha=alpha, beta=beta, u0_l2_sq=l2_norm_sq(u0))

    @property
    def nu(self) -> float:
        """Drift speed (alpha/pi)*||u0||^2 removed by the gauge translation."""
        return self.alpha / pi * self.u0_l2_sq

    @property
    def dissipation_coeff(self) -> float:
        """Signed coefficient (beta/2pi)*||u0||^2 of the D_x term (= -mu for beta < 0)."""
        return self.beta / TWO_PI * self.u0_l2_sq


@dataclass(frozen=True)
class NonlinearityParts:
    """The five summands whose total equals the full nonlinearity."""

    n1: SpectralField
    n2: SpectralField
    n3: SpectralField
    renorm_derivative: SpectralField   # (alpha/pi)||u0||^2 d_x u
    renorm_dissipative: SpectralField  # (beta/2pi)||u0||^2 D_x u

    def total(self) -> SpectralField:
        return (
            self.n1 + self.n2 + self.n3
            + self.renorm_derivative + self.renorm_dissipative
        )


def resonance_function(k1: int, k2: int, k3: int) -> int:
    """2*(k1-k2)*(k3-k2); zero exactly on the resonant triples k2 = k1 or k2 = k3."""
    for k in (k1, k2, k3):
        if abs(k) > _MAX_RESONANCE_ARG:
            raise ConfigurationError(f"|k| <= {_MAX_RESONANCE_ARG} required, got {k}")
    return 2 * (int(k1) - int(k2)) * (int(k3) - int(k2))


def _truncate_extended(grid: GridSpec, ext: np.ndarray) -> np.ndarray:
    """Modes -K..K out of an extended array indexed by m + 2K."""
    return ext[grid.K : 3 * grid.K + 1]


def full_nonlinearity_coeffs(
    grid: GridSpec, c: np.ndarray, alpha: float, beta: float
) -> np.ndarray:
    """Array path of full_nonlinearity."""
    p = physical_values(grid, c)
    w = p * np.conj(p)  # |u|^2, a degree-2K polynomial, exact on M >= 4K+1
    cubic = spectral_coeffs(grid, w * p)
    # Hilbert transform of |u|^2 needs the full 2K band of w.
    freqs = np.fft.fftfreq(grid.M, d=1.0 / grid.M)
    hw = np.fft.ifft(np.fft.fft(w) * (-1j) * np.sign(freqs))
    hcubic = spectral_coeffs(grid, hw * p)
    k = grid.modes
    return 1j * k * (alpha * cubic + beta * hcubic)


def full_nonlinearity(u: SpectralField, params: EquationParams) -> SpectralField:
    """alpha*d_x(|u|^2 u) + beta*d_x[H(|u|^2) u], truncated to |k| <= K."""
    return SpectralField(
        u.grid, full_nonlinearity_coeffs(u.grid, u.coeffs, params.alpha, params.beta)
    )


def n1_coeffs(
    grid: GridSpec,
    u_l2_sq: float,
    v_l2_sq: float,
    c3: np.ndarray,
    alpha: float,
    beta: float,
) -> np.ndarray:
    """Array path of n1."""
    k = grid.modes
    symbol = alpha / pi * 1j * k + beta / TWO_PI * np.abs(k)
    return (u_l2_sq - v_l2_sq) * symbol * c3


def n1(
    u: SpectralField, v_l2_sq: float, u3: SpectralField, params: EquationParams
) -> SpectralField:
    """N1[u, v; u3] = (||u||^2 - ||v||^2) ((alpha/pi) d_x u3 + (beta/2pi) D_x u3)."""
    _check_same_grid(u, u3)
    return SpectralField(
        u3.grid,
        n1_coeffs(u3.grid, l2_norm_sq(u), v_l2_sq, u3.coeffs, params.alpha, params.beta),
    )


def _signed_tail_sums(g: np.ndarray, K: int) -> np.ndarray:
    """sum_{k'} k*[sgn(k-k') - sgn(k)] g(k') for every k, in O(K).

    The bracket equals -|k| at k' = k, -2|k| for k' strictly beyond k on the
    same side (k' > k > 0 or k' < k < 0), and 0 otherwise; sgn(0) = 0.
    """
    k = np.arange(-K, K + 1)
    above = np.cumsum(g[::-1])[::-1] - g  # sum over k' > k
    below = np.cumsum(g) - g              # sum over k' < k
    out = np.zeros_like(g)
    pos = k > 0
    neg = k < 0
    out[pos] = -k[pos] * (g[pos] + 2.0 * above[pos])
    out[neg] = k[neg] * (g[neg] + 2.0 * below[neg])
    return out


def n2_coeffs(
    grid: GridSpec,
    c1: np.ndarray,
    c2: np.ndarray,
    c3: np.ndarray,
    alpha: float,
    beta: float,
) -> np.ndarray:
    """Array path of n2."""
    k = grid.modes
    g = c1 * np.conj(c2)
    diagonal = -1j * alpha * k * g * c3
    return diagonal + beta * _signed_tail_sums(g, grid.K) * c3


def n2(
    u1: SpectralField, u2: SpectralField, u3: SpectralField, params: EquationParams
) -> SpectralField:
    """Pointwise-diagonal cubic term plus the one-sided tail sum.

    N2[u1,u2,u3]^(k) = -i*alpha*k u1^(k) conj(u2^)(k) u3^(k)
        + beta * { sum_{k'} k [sgn(k-k') - sgn(k)] u1^(k') conj(u2^)(k') } u3^(k).
    """
    _check_same_grid(u1, u2)
    _check_same_grid(u1, u3)
    return SpectralField(
        u1.grid,
        n2_coeffs(u1.grid, u1.coeffs, u2.coeffs, u3.coeffs, params.alpha, params.beta),
    )


def n3_coeffs(
    grid: GridSpec,
    c1: np.ndarray,
    c2: np.ndarray,
    c3: np.ndarray,
    alpha: float,
    beta: float,
) -> np.ndarray:
    """Array path of n3."""
    K, M = grid.K, grid.M
    k = grid.modes
    p1 = physical_values(grid, c1)
    p2 = physical_values(grid, c2)
    p3 = physical_values(grid, c3)
    w = p1 * np.conj(p2)
    # Unconstrained sums as dealiased products: alpha d_x[(u1 conj(u2)) u3]
    # + beta d_x[H(u1 conj(u2)) u3].
    freqs = np.fft.fftfreq(M, d=1.0 / M)
    hw = np.fft.ifft(np.fft.fft(w) * (-1j) * np.sign(freqs))
    term_a = spectral_coeffs(grid, w * p3)
    term_b = spectral_coeffs(grid, hw * p3)
    out = 1j * k * (alpha * term_a + beta * term_b)
    # Remove the k2 = k1 diagonal: alpha * P * d_x u3 with P = sum u1^ conj(u2^).
    g = c1 * np.conj(c2)
    total_mass = np.sum(g)
    out -= alpha * total_mass * 1j * k * c3
    # Remove the k2 = k3 diagonal: u1^(k) * ik * Q(k), with
    # Q(k) = sum_{k3} [alpha - i*beta*sgn(k-k3)] conj(u2^)(k3) u3^(k3).
    h = np.conj(c2) * c3
    below = np.cumsum(h) - h
    above = np.cumsum(h[::-1])[::-1] - h
    q = alpha * np.sum(h) - 1j * beta * (below - above)
    out -= c1 * 1j * k * q
    # The k1 = k2 = k3 triple was removed twice; add it back (sgn(0) = 0).
    out += 1j * alpha * k * g * c3
    return out


def n3(
    u1: SpectralField, u2: SpectralField, u3: SpectralField, params: EquationParams
) -> SpectralField:
    """Nonresonant cubic sum, k2 distinct from k1 and k3:

    N3[u1,u2,u3]^(k) = ik sum_{k1-k2+k3=k, k2 != k1, k2 != k3}
        [alpha - i*beta*sgn(k1-k2)] u1^(k1) conj(u2^)(k2) u3^(k3),

    computed as unconstrained pseudospectral products plus O(K) diagonal
    corrections.
    """
    _check_same_grid(u1, u2)
    _check_same_grid(u1, u3)
    return SpectralField(
        u1.grid,
        n3_coeffs(u1.grid, u1.coeffs, u2.coeffs, u3.coeffs, params.alpha, params.beta),
    )


def nonlinearity_parts(u: SpectralField, params: EquationParams) -> NonlinearityParts:
    """All five summands of the decomposition, evaluated on u."""
    grid = u.grid
    k = grid.modes
    renorm_derivative = SpectralField(
        grid, params.alpha / pi * params.u0_l2_sq * 1j * k * u.coeffs
    )
    renorm_dissipative = SpectralField(
        grid, params.beta / TWO_PI * params.u0_l2_sq * np.abs(k) * u.coeffs
    )
    return NonlinearityParts(
        n1=n1(u, params.u0_l2_sq, u, params),
        n2=n2(u, u, u, params),
        n3=n3(u, u, u, params),
        renorm_derivative=renorm_derivative,
        renorm_dissipative=renorm_dissipative,
    )


def renormalized_rhs_coeffs(
    grid: GridSpec, c: np.ndarray, params: EquationParams
) -> np.ndarray:
    """N1[u,u0;u] + N2[u,u,u] + N3[u,u,u] on raw coefficients (solver hot path)."""
    u_l2_sq = TWO_PI * np.sum(np.abs(c) ** 2)
    return (
        n1_coeffs(grid, u_l2_sq, params.u0_l2_sq, c, params.alpha, params.beta)
        + n2_coeffs(grid, c, c, c, params.alpha, params.beta)
        + n3_coeffs(grid, c, c, c, params.alpha, params.beta)
    )


def decomposition_residual(u: SpectralField, params: EquationParams) -> float:
    """L^2 norm of full_nonlinearity(u) minus the sum of the five parts.

    Zero up to rounding error for every field and every u0_l2_sq >= 0.
    """
    full = full_nonlinearity(u, params)
    parts = nonlinearity_parts(u, params)
    diff = full - parts.total()
    return float(np.sqrt(TWO_PI * np.sum(np.abs(diff.coeffs) ** 2)))
