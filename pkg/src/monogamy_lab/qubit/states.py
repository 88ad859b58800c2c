"""Pure and mixed multi-qubit states with reduction and entropy primitives.

Conventions: qubit 0 is the leftmost tensor factor, so a computational
basis index encodes the bit string big-endian.  All entropies are in bits
(base-2 logarithms).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from ..errors import DimensionError, PartitionError, StateValidationError

NORM_TOL = 1e-12
HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
ENTROPY_EIGVAL_CUTOFF = 1e-14

MAX_QUBITS = 10


def _check_n_qubits(n_qubits: int, dim: int) -> None:
    if n_qubits < 1 or n_qubits > MAX_QUBITS:
        raise DimensionError(f"n_qubits must be in [1, {MAX_QUBITS}], got {n_qubits}")
    if dim != 2**n_qubits:
        raise DimensionError(f"dimension {dim} does not match 2^{n_qubits}")


@dataclass(frozen=True)
class QubitPureState:
    """Normalized amplitude vector over ``n_qubits`` qubits."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).ravel()
        _check_n_qubits(self.n_qubits, amps.size)
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise StateValidationError(f"squared norm {norm_sq} deviates from 1")
        amps = amps.copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 2**self.n_qubits

    def to_json(self) -> str:
        payload = {
            "n_qubits": self.n_qubits,
            "amplitudes": [[a.real, a.imag] for a in self.amplitudes],
        }
        return json.dumps(payload)

    @classmethod
    def from_json(cls, text: str) -> "QubitPureState":
        data = json.loads(text)
        amps = np.array([complex(re, im) for re, im in data["amplitudes"]])
        return cls(int(data["n_qubits"]), amps)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, PSD operator on a qubit register."""

    n_qubits: int
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise DimensionError(f"matrix must be square, got shape {mat.shape}")
        _check_n_qubits(self.n_qubits, mat.shape[0])
        herm_dev = float(np.max(np.abs(mat - mat.conj().T)))
        if herm_dev > HERMITICITY_TOL:
            raise StateValidationError(f"not Hermitian: max deviation {herm_dev}")
        tr = complex(np.trace(mat))
        if abs(tr - 1.0) > TRACE_TOL:
            raise StateValidationError(f"trace {tr} deviates from 1")
        min_eig = float(np.linalg.eigvalsh(mat)[0])
        if min_eig < -PSD_TOL:
            raise StateValidationError(f"negative eigenvalue {min_eig}")
        mat = mat.copy()
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @property
    def dim(self) -> int:
        return 2**self.n_qubits

    def to_json(self) -> str:
        payload = {
            "n_qubits": self.n_qubits,
            "matrix": [[[z.real, z.imag] for z in row] for row in self.matrix],
        }
        return json.dumps(payload)

    @classmethod
    def from_json(cls, text: str) -> "DensityMatrix":
        data = json.loads(text)
        mat = np.array(
            [[complex(re, im) for re, im in row] for row in data["matrix"]]
        )
        return cls(int(data["n_qubits"]), mat)


@dataclass(frozen=True)
class QubitPartition:
    """Split of qubit indices into a kept set and a traced-out set."""

    kept: tuple
    traced: tuple
    n_qubits: int = field(default=0)

    @classmethod
    def keep(cls, kept, n_qubits: int) -> "QubitPartition":
        kept = tuple(sorted(set(int(k) for k in kept)))
        if not kept:
            raise PartitionError("kept set must be non-empty")
        if kept[0] < 0 or kept[-1] >= n_qubits:
            raise PartitionError(f"qubit index out of range for n={n_qubits}: {kept}")
        traced = tuple(i for i in range(n_qubits) if i not in kept)
        return cls(kept=kept, traced=traced, n_qubits=n_qubits)


def to_density_matrix(psi: QubitPureState) -> DensityMatrix:
    """Rank-1 projector |psi><psi|."""
    rho = np.outer(psi.amplitudes, psi.amplitudes.conj())
    return DensityMatrix(psi.n_qubits, rho)


def _reduced_from_pure(amps: np.ndarray, n_qubits: int, kept) -> np.ndarray:
    """Reduced density matrix of a pure state without forming the full projector."""
    kept = list(kept)
    traced = [i for i in range(n_qubits) if i not in kept]
    tensor = amps.reshape((2,) * n_qubits)
    tensor = np.transpose(tensor, kept + traced)
    m = tensor.reshape(2 ** len(kept), 2 ** len(traced))
    return m @ m.conj().T


def reduced_density_matrix(psi: QubitPureState, kept) -> DensityMatrix:
    """Partial trace of |psi><psi| keeping the given qubits."""
    part = QubitPartition.keep(kept, psi.n_qubits)
    rho = _reduced_from_pure(psi.amplitudes, psi.n_qubits, part.kept)
    return DensityMatrix(len(part.kept), rho)


def partial_trace(rho: DensityMatrix, part: QubitPartition) -> DensityMatrix:
    """Reduced density matrix on ``part.kept`` qubits."""
    if part.n_qubits != rho.n_qubits:
        raise PartitionError(
            f"partition is for {part.n_qubits} qubits, state has {rho.n_qubits}"
        )
    n = rho.n_qubits
    kept = list(part.kept)
    traced = list(part.traced)
    tensor = rho.matrix.reshape((2,) * (2 * n))
    # Row axes first, then column axes, kept indices leading in each group.
    order = kept + traced + [n + i for i in kept] + [n + i for i in traced]
    tensor = np.transpose(tensor, order)
    dk, dt = 2 ** len(kept), 2 ** len(traced)
    tensor = tensor.reshape(dk, dt, dk, dt)
    reduced = np.einsum("itjt->ij", tensor)
    return DensityMatrix(len(kept), reduced)


def partial_transpose(rho: DensityMatrix, subsystem) -> np.ndarray:
    """Partial transpose over the given qubit subset.

    Returns a raw matrix: it is Hermitian and trace one but in general not
    positive semidefinite.
    """
    n = rho.n_qubits
    sub = sorted(set(int(s) for s in subsystem))
    if not sub or len(sub) >= n:
        raise PartitionError("subsystem must be a proper non-empty subset")
    if sub[0] < 0 or sub[-1] >= n:
        raise PartitionError(f"qubit index out of range for n={n}: {sub}")
    tensor = rho.matrix.reshape((2,) * (2 * n))
    order = list(range(2 * n))
    for q in sub:
        order[q], order[n + q] = order[n + q], order[q]
    return np.transpose(tensor, order).reshape(rho.dim, rho.dim)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Entropy -sum(l * log2 l) over eigenvalues above the noise cutoff, in bits."""
    eigvals = np.linalg.eigvalsh(rho.matrix)
    eigvals = eigvals[eigvals > ENTROPY_EIGVAL_CUTOFF]
    return float(-np.sum(eigvals * np.log2(eigvals)))


def linear_entropy(rho: DensityMatrix) -> float:
    """1 - Tr(rho^2), in [0, 1 - 2^-n]."""
    return float(1.0 - np.trace(rho.matrix @ rho.matrix).real)


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2)."""
    return float(np.trace(rho.matrix @ rho.matrix).real)
