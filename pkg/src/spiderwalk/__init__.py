"""Grover quantum walks on spidernets S(a, b, c).

Three independent routes to the same transition amplitudes:

* explicit evolution on the graph (:mod:`spiderwalk.walk`),
* a one-dimensional three-component reduction (:mod:`spiderwalk.reduction`),
* a spectral integral against a free Meixner law (:mod:`spiderwalk.meixner`),

plus closed-form localization constants and bounds
(:mod:`spiderwalk.localization`).
"""

from .errors import (
    BoundaryVertexError,
    ConvergenceFailureError,
    DimensionMismatchError,
    InvalidParamsError,
    NotLocalizedError,
    OutOfDomainError,
    OutOfSupportError,
    ParamsOutOfRangeError,
    RadiusTooSmallError,
    SpiderwalkError,
    UnrealizableWiringError,
)
from .graph import (
    DEFAULT_MAX_HALF_EDGES,
    Spidernet,
    SpidernetParams,
    build_spidernet,
    edge_list_text,
    half_edge_permutation,
    omega,
    rotation_permutation,
    write_edge_list,
)
from .localization import (
    LocalizationReport,
    amplitude,
    amplitude_shifted,
    asymptotic_amplitude,
    cesaro_origin,
    cesaro_strata,
    classify,
    exp_localization_bound,
    origin_amplitude_series,
    random_walk_return,
)
from .meixner import (
    FreeMeixnerLaw,
    QuadratureSpec,
    chebyshev_U,
    density,
    integrate,
    law_from_pq,
    normalized_p,
    normalized_sequence,
    orth_poly_closed_R,
    orth_poly_closed_cheb,
    orth_poly_recurrence,
    special_value,
)
from .reduction import (
    JacobiMatrixT,
    PqParams,
    ReducedEvolver,
    ReducedState,
    UEigensystem,
    build_T,
    cutoff_dim,
    cutoff_index,
    cutoff_psi_vector,
    cutoff_walk_matrix,
    discrete_spectral_measure,
    eigensystem_T,
    embed,
    inner,
    origin_probability,
    params_from_spidernet,
    reduced_coin,
    reduced_evolve,
    reduced_shift,
    reduced_step,
    stratum_probability,
    stratum_state,
    u_eigensystem,
)
from .walk import (
    coin_apply,
    evolve,
    isotropic_initial_state,
    shift_apply,
    step,
    stratum_distribution,
    time_averaged_distribution,
    vertex_distribution,
)

__version__ = "0.1.0"

__all__ = [
    "SpiderwalkError",
    "InvalidParamsError",
    "UnrealizableWiringError",
    "BoundaryVertexError",
    "DimensionMismatchError",
    "RadiusTooSmallError",
    "ConvergenceFailureError",
    "ParamsOutOfRangeError",
    "OutOfSupportError",
    "OutOfDomainError",
    "NotLocalizedError",
    "SpidernetParams",
    "Spidernet",
    "build_spidernet",
    "omega",
    "rotation_permutation",
    "half_edge_permutation",
    "write_edge_list",
    "edge_list_text",
    "DEFAULT_MAX_HALF_EDGES",
    "isotropic_initial_state",
    "coin_apply",
    "shift_apply",
    "step",
    "evolve",
    "vertex_distribution",
    "stratum_distribution",
    "time_averaged_distribution",
    "PqParams",
    "params_from_spidernet",
    "ReducedState",
    "reduced_coin",
    "reduced_shift",
    "reduced_step",
    "reduced_evolve",
    "ReducedEvolver",
    "inner",
    "origin_probability",
    "stratum_probability",
    "stratum_state",
    "embed",
    "JacobiMatrixT",
    "build_T",
    "eigensystem_T",
    "cutoff_dim",
    "cutoff_index",
    "cutoff_psi_vector",
    "cutoff_walk_matrix",
    "UEigensystem",
    "u_eigensystem",
    "discrete_spectral_measure",
    "FreeMeixnerLaw",
    "law_from_pq",
    "density",
    "chebyshev_U",
    "orth_poly_recurrence",
    "orth_poly_closed_cheb",
    "orth_poly_closed_R",
    "normalized_p",
    "normalized_sequence",
    "special_value",
    "QuadratureSpec",
    "integrate",
    "amplitude",
    "amplitude_shifted",
    "asymptotic_amplitude",
    "LocalizationReport",
    "classify",
    "cesaro_origin",
    "cesaro_strata",
    "exp_localization_bound",
    "random_walk_return",
    "origin_amplitude_series",
    "__version__",
]
