"""Exact generators, shock-measure duality and Monte Carlo for the open
ASEP and its reverse-dual shock exclusion process."""

from shocklab._core import (
    ConfigError,
    Generator,
    Lattice,
    Rates,
    ResourceLimitError,
    build_h,
    build_q,
    build_w,
    compare_empirical_exact,
    dense_eigs,
    duality_matrices,
    evolve_and_compare,
    expm_action,
    fugacity,
    gillespie_asep,
    invariant_measure,
    kappa,
    manifold_residuals,
    profile_from_boundary,
    rates_from_parametrization,
    rw_propagator,
    rw_spectrum,
    shock_measure_vector,
    shock_rates,
    solve_manifold,
    spectrum_containment,
    stationary_from_nullspace,
    verify_reverse_duality,
    xxz_params,
    xxz_residual,
)

__all__ = [
    "ConfigError",
    "Generator",
    "Lattice",
    "Rates",
    "ResourceLimitError",
    "build_h",
    "build_q",
    "build_w",
    "compare_empirical_exact",
    "dense_eigs",
    "duality_matrices",
    "evolve_and_compare",
    "expm_action",
    "fugacity",
    "gillespie_asep",
    "invariant_measure",
    "kappa",
    "manifold_residuals",
    "profile_from_boundary",
    "rates_from_parametrization",
    "rw_propagator",
    "rw_spectrum",
    "shock_measure_vector",
    "shock_rates",
    "solve_manifold",
    "spectrum_containment",
    "stationary_from_nullspace",
    "verify_reverse_duality",
    "xxz_params",
    "xxz_residual",
]
