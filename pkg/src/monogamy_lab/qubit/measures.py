"""Two-qubit entanglement monotones and the N-qubit monogamy verifier.

Normalization: the pure-state one-vs-rest tangle is 4*det(rho_focus), so
that it equals concurrence squared for two qubits and the GHZ state has
residual tangle 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DimensionError, PartitionError
from .states import (
    DensityMatrix,
    QubitPureState,
    _reduced_from_pure,
    partial_transpose,
)

SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_YY = np.kron(SIGMA_Y, SIGMA_Y)

DEFAULT_MONOGAMY_TOL = 1e-9


def _as_matrix(rho, n_qubits: int) -> np.ndarray:
    if isinstance(rho, DensityMatrix):
        if rho.n_qubits != n_qubits:
            raise DimensionError(f"expected {n_qubits}-qubit state, got {rho.n_qubits}")
        return rho.matrix
    mat = np.asarray(rho, dtype=complex)
    if mat.shape != (2**n_qubits, 2**n_qubits):
        raise DimensionError(f"expected shape {(2**n_qubits,) * 2}, got {mat.shape}")
    return mat


# Density-matrix eigenvalues below this are treated as exact zeros when
# taking matrix square roots; sqrt amplifies noise-floor eigenvalues to
# ~1e-8, which would swamp the 1e-9 tolerances downstream.
SQRT_EIGVAL_CUTOFF = 1e-13


def _hermitian_sqrt(mat: np.ndarray) -> np.ndarray:
    eigvals, eigvecs = np.linalg.eigh(mat)
    roots = np.sqrt(np.clip(eigvals, 0.0, None))
    roots[eigvals < SQRT_EIGVAL_CUTOFF] = 0.0
    return (eigvecs * roots) @ eigvecs.conj().T


def _concurrence(mat: np.ndarray) -> float:
    # Hermitian route: the sqrt-eigenvalues of rho*rho_tilde are the singular
    # values of sqrt(rho) sqrt(rho_tilde), computed without square-rooting
    # eigenvalues of a nearly singular product.
    sqrt_rho = _hermitian_sqrt(mat)
    # rho_tilde = YY rho* YY with YY unitary, so its sqrt is YY sqrt(rho)* YY.
    sqrt_flip = _YY @ sqrt_rho.conj() @ _YY
    lam = np.linalg.svd(sqrt_rho @ sqrt_flip, compute_uv=False)
    return float(max(0.0, 2.0 * lam[0] - np.sum(lam)))


def concurrence(rho) -> float:
    """Wootters concurrence of a two-qubit state, in [0, 1]."""
    return _concurrence(_as_matrix(rho, 2))


def tangle_two_qubit(rho) -> float:
    """Squared concurrence; the two-qubit convex-roof tangle in closed form."""
    return _concurrence(_as_matrix(rho, 2)) ** 2


def binary_entropy(x: float) -> float:
    """H(x) = -x log2 x - (1-x) log2(1-x)."""
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return float(-x * np.log2(x) - (1.0 - x) * np.log2(1.0 - x))


def eof_from_concurrence(c: float) -> float:
    """f(C) = H[(1 + sqrt(1 - C^2)) / 2], in bits."""
    c = min(max(c, 0.0), 1.0)
    return binary_entropy(0.5 * (1.0 + np.sqrt(1.0 - c * c)))


def entanglement_of_formation(rho) -> float:
    """Entanglement of formation of a two-qubit state, in bits."""
    return eof_from_concurrence(concurrence(rho))


def negativity(rho: DensityMatrix, subsystem) -> float:
    """(||rho_pt||_1 - 1) / 2 = |sum of negative eigenvalues of rho_pt|."""
    rho_pt = partial_transpose(rho, subsystem)
    eigvals = np.linalg.eigvalsh(rho_pt)
    return float(-np.sum(eigvals[eigvals < 0.0]))


def pure_tangle_one_vs_rest(psi: QubitPureState, focus: int) -> float:
    """Tangle between one qubit and the rest of a pure state: 4 det(rho_focus)."""
    if psi.n_qubits < 2:
        raise DimensionError("need at least 2 qubits")
    if focus < 0 or focus >= psi.n_qubits:
        raise PartitionError(f"focus {focus} out of range for n={psi.n_qubits}")
    rho1 = _reduced_from_pure(psi.amplitudes, psi.n_qubits, [focus])
    det = (rho1[0, 0] * rho1[1, 1] - rho1[0, 1] * rho1[1, 0]).real
    return float(min(max(4.0 * det, 0.0), 1.0))


@dataclass(frozen=True)
class TangleDecomposition:
    """One-vs-rest tangle of a focus qubit, its pairwise tangles, and the residual."""

    focus: int
    one_vs_rest: float
    pairwise: dict
    residual: float


@dataclass(frozen=True)
class MonogamyReport:
    """Per-state record of the one-vs-rest vs pairwise tangle bookkeeping."""

    focus: int
    one_vs_rest: float
    pairwise: dict
    residual: float
    holds: bool
    tolerance: float = field(default=DEFAULT_MONOGAMY_TOL)

    def to_json_dict(self) -> dict:
        return {
            "focus": self.focus,
            "one_vs_rest": self.one_vs_rest,
            "pairwise": {str(j): v for j, v in sorted(self.pairwise.items())},
            "residual": self.residual,
            "holds": self.holds,
            "tolerance": self.tolerance,
        }


def _tangle_decomposition(psi: QubitPureState, focus: int) -> TangleDecomposition:
    one_vs_rest = pure_tangle_one_vs_rest(psi, focus)
    pairwise = {}
    for j in range(psi.n_qubits):
        if j == focus:
            continue
        kept = sorted([focus, j])
        rho2 = _reduced_from_pure(psi.amplitudes, psi.n_qubits, kept)
        pairwise[j] = _concurrence(rho2) ** 2
    residual = one_vs_rest - sum(pairwise.values())
    return TangleDecomposition(focus, one_vs_rest, pairwise, residual)


def residual_tangle_three_qubits(psi: QubitPureState, focus: int = 0) -> TangleDecomposition:
    """Three-qubit residual tangle decomposition for the given focus."""
    if psi.n_qubits != 3:
        raise DimensionError(f"need a 3-qubit pure state, got n={psi.n_qubits}")
    return _tangle_decomposition(psi, focus)


def ckw_check(
    psi: QubitPureState,
    focus: int,
    tolerance: float = DEFAULT_MONOGAMY_TOL,
) -> MonogamyReport:
    """Monogamy check for a pure N-qubit state: one-vs-rest tangle vs pairwise sum."""
    if psi.n_qubits < 3:
        raise DimensionError(f"need at least 3 qubits, got n={psi.n_qubits}")
    dec = _tangle_decomposition(psi, focus)
    return MonogamyReport(
        focus=dec.focus,
        one_vs_rest=dec.one_vs_rest,
        pairwise=dec.pairwise,
        residual=dec.residual,
        holds=bool(dec.residual >= -tolerance),
        tolerance=tolerance,
    )
