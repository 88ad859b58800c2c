from .measures import (
    MonogamyReport,
    TangleDecomposition,
    binary_entropy,
    ckw_check,
    concurrence,
    entanglement_of_formation,
    eof_from_concurrence,
    negativity,
    pure_tangle_one_vs_rest,
    residual_tangle_three_qubits,
    tangle_two_qubit,
)
from .states import (
    DensityMatrix,
    QubitPartition,
    QubitPureState,
    linear_entropy,
    partial_trace,
    partial_transpose,
    purity,
    reduced_density_matrix,
    to_density_matrix,
    von_neumann_entropy,
)
