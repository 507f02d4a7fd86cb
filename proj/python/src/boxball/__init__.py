from ._core import (
    DomainError,
    action,
    angle,
    birational_r,
    comb_r,
    embed,
    energies,
    evolve,
    evolve_periodic,
    fundamental_period,
    inverse_scattering,
    isolevel_cardinality,
    kkr,
    kkr_inverse,
    scatter,
    spectral_data,
    tau_table,
    theta,
    toda_conserved,
    toda_evolve,
    torus_decomposition,
)

__all__ = [
    "DomainError",
    "action",
    "angle",
    "birational_r",
    "comb_r",
    "embed",
    "energies",
    "evolve",
    "evolve_periodic",
    "fundamental_period",
    "inverse_scattering",
    "isolevel_cardinality",
    "kkr",
    "kkr_inverse",
    "scatter",
    "spectral_data",
    "tau_table",
    "theta",
    "toda_conserved",
    "toda_evolve",
    "torus_decomposition",
]
