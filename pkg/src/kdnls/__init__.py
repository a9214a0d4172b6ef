"""Pseudospectral simulation laboratory for a dissipative derivative NLS
equation with a nonlocal (Hilbert-transform) nonlinearity on the torus.
"""

from .spectral import (
    ConfigurationError,
    GridSpec,
    MultiplierSymbol,
    SpectralField,
    apply_multiplier,
    dealiased_product,
    default_grid_size,
    dissipation_rate,
    l2_norm_sq,
    sobolev_norm,
    to_physical,
    to_spectral,
)
from .nonlinearity import (
    EquationParams,
    NonlinearityParts,
    decomposition_residual,
    full_nonlinearity,
    n1,
    n2,
    n3,
    nonlinearity_parts,
    resonance_function,
)
from .propagator import (
    ReducedSymbol,
    apply_semigroup,
    compute_mu,
    gauge_translate,
    reduced_exact_solution,
    single_mode_exact,
)
from .integrator import (
    Frame,
    IntegrationError,
    Scheme,
    SolverConfig,
    Trajectory,
    picard_differences,
    picard_solve,
    solve,
    solve_backward,
    step_ifrk4,
)
from .diagnostics import (
    BoundMonitors,
    DiagnosticsRecord,
    bound_monitors,
    compute_diagnostics,
    l2_identity_residual,
    smoothing_metric,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigurationError",
    "GridSpec",
    "MultiplierSymbol",
    "SpectralField",
    "apply_multiplier",
    "dealiased_product",
    "default_grid_size",
    "dissipation_rate",
    "l2_norm_sq",
    "sobolev_norm",
    "to_physical",
    "to_spectral",
    "EquationParams",
    "NonlinearityParts",
    "decomposition_residual",
    "full_nonlinearity",
    "n1",
    "n2",
    "n3",
    "nonlinearity_parts",
    "resonance_function",
    "ReducedSymbol",
    "apply_semigroup",
    "compute_mu",
    "gauge_translate",
    "reduced_exact_solution",
    "single_mode_exact",
    "Frame",
    "IntegrationError",
    "Scheme",
    "SolverConfig",
    "Trajectory",
    "picard_differences",
    "picard_solve",
    "solve",
    "solve_backward",
    "step_ifrk4",
    "BoundMonitors",
    "DiagnosticsRecord",
    "bound_monitors",
    "compute_diagnostics",
    "l2_identity_residual",
    "smoothing_metric",
    "__version__",
]
