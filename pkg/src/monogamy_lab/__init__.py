"""Entanglement monotones and monogamy verification for qubit and Gaussian states."""

from .errors import (
    DimensionError,
    MonogamyLabError,
    NumericalError,
    PartitionError,
    PurityError,
    StateValidationError,
    UnphysicalStateError,
)
from .gaussian import (
    CovarianceMatrix,
    contangle_pure,
    gaussian_contangle,
    gaussian_contangle_one_vs_rest,
    ghzw_three_mode,
    log_negativity,
    negativity_gaussian,
    promiscuity_sweep,
    purity_cm,
    random_mixed_cm,
    random_pure_cm,
    reduced_cm,
    residual_gaussian_contangle,
    symplectic_spectrum,
    two_mode_squeezed,
    williamson,
)
from .qubit import (
    DensityMatrix,
    QubitPartition,
    QubitPureState,
    ckw_check,
    concurrence,
    entanglement_of_formation,
    linear_entropy,
    negativity,
    partial_trace,
    partial_transpose,
    pure_tangle_one_vs_rest,
    reduced_density_matrix,
    residual_tangle_three_qubits,
    tangle_two_qubit,
    to_density_matrix,
    von_neumann_entropy,
)
from .sampling import haar_random_pure_state, trial_rng

__version__ = "0.1.0"

__all__ = [
    "CovarianceMatrix",
    "DensityMatrix",
    "DimensionError",
    "MonogamyLabError",
    "NumericalError",
    "PartitionError",
    "PurityError",
    "QubitPartition",
    "QubitPureState",
    "StateValidationError",
    "UnphysicalStateError",
    "ckw_check",
    "concurrence",
    "contangle_pure",
    "entanglement_of_formation",
    "gaussian_contangle",
    "gaussian_contangle_one_vs_rest",
    "ghzw_three_mode",
    "haar_random_pure_state",
    "linear_entropy",
    "log_negativity",
    "negativity",
    "negativity_gaussian",
    "partial_trace",
    "partial_transpose",
    "promiscuity_sweep",
    "pure_tangle_one_vs_rest",
    "purity_cm",
    "random_mixed_cm",
    "random_pure_cm",
    "reduced_cm",
    "reduced_density_matrix",
    "residual_gaussian_contangle",
    "residual_tangle_three_qubits",
    "symplectic_spectrum",
    "tangle_two_qubit",
    "to_density_matrix",
    "trial_rng",
    "two_mode_squeezed",
    "von_neumann_entropy",
    "williamson",
]
