"""Whitham–Boussinesq numerical laboratory (Python bindings)."""

from ._core import (
    ConfigError,
    ConstraintError,
    DomainError,
    Grid,
    ShapeError,
    State,
    bilinear_constant,
    bracket,
    bump_beta,
    data_size,
    dispersive_bound,
    dispersive_ratio,
    energy,
    fit_power_law,
    gaussian_state,
    hamiltonian_residual,
    k_mu,
    kernel_I,
    lifespan_delta,
    m_mu,
    plane_wave_state,
    random_state,
    rescale_to,
    run_cli,
    simulate,
    strichartz_bound,
    theory_lifespan,
)

__version__ = "0.1.0"
