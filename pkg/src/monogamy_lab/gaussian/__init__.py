from .cm import (
    CovarianceMatrix,
    ghzw_three_mode,
    is_physical,
    partial_transpose_cm,
    random_mixed_cm,
    random_pure_cm,
    reduced_cm,
    symplectic_form,
    symplectic_spectrum,
    two_mode_squeezed,
    williamson,
)
from .cm import purity as purity_cm
from .measures import (
    ContangleReport,
    GaussianMonogamyReport,
    contangle_pure,
    gaussian_contangle,
    gaussian_contangle_one_vs_rest,
    log_negativity,
    negativity_gaussian,
    promiscuity_sweep,
    residual_gaussian_contangle,
)
