"""Covariance-matrix representation of N-mode Gaussian states.

Conventions: quadratures are ordered mode-major (x1, p1, x2, p2, ...), the
single-mode symplectic form is omega = [[0, 1], [-1, 0]], and the vacuum
covariance matrix is the identity, so physicality reads n_i >= 1 for every
symplectic eigenvalue n_i.  First moments are not represented.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..errors import (
    DimensionError,
    NumericalError,
    PartitionError,
    StateValidationError,
    UnphysicalStateError,
)
from ..sampling import haar_unitary

SYMMETRY_TOL = 1e-12
PHYSICALITY_TOL = 1e-9
PAIRING_TOL = 1e-9

MAX_MODES = 10


def symplectic_form(n_modes: int) -> np.ndarray:
    """Block-diagonal symplectic form, one omega = [[0,1],[-1,0]] per mode."""
    omega = np.array([[0.0, 1.0], [-1.0, 0.0]])
    return np.kron(np.eye(n_modes), omega)


def _as_sigma(cm) -> np.ndarray:
    sigma = cm.sigma if isinstance(cm, CovarianceMatrix) else np.asarray(cm, dtype=float)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1] or sigma.shape[0] % 2:
        raise DimensionError(f"covariance matrix must be 2N x 2N, got {sigma.shape}")
    return sigma


def symplectic_spectrum(cm) -> np.ndarray:
    """Symplectic eigenvalues {n_i}, sorted ascending.

    Computed from the eigenvalues of Omega @ sigma, which come in +/- i n_k
    pairs for symmetric sigma.
    """
    sigma = _as_sigma(cm)
    if np.max(np.abs(sigma - sigma.T)) > 1e-10 * max(1.0, np.max(np.abs(sigma))):
        raise DimensionError("covariance matrix must be symmetric")
    n = sigma.shape[0] // 2
    scale = max(1.0, float(np.max(np.abs(sigma))))
    eigvals = np.linalg.eigvals(symplectic_form(n) @ sigma)
    if np.max(np.abs(eigvals.real)) > PAIRING_TOL * scale:
        raise NumericalError("eigenvalues of Omega @ sigma are not purely imaginary")
    vals = np.sort(np.abs(eigvals.imag))
    lo, hi = vals[::2], vals[1::2]
    if np.max(np.abs(hi - lo)) > PAIRING_TOL * scale:
        raise NumericalError("symplectic eigenvalues do not pair up")
    return 0.5 * (lo + hi)


def symplectic_spectrum_hermitian(cm) -> np.ndarray:
    """Cross-check route: eigenvalues of sqrt(sigma) (-Omega sigma Omega) sqrt(sigma)."""
    sigma = _as_sigma(cm)
    n = sigma.shape[0] // 2
    omega = symplectic_form(n)
    eigvals, eigvecs = np.linalg.eigh(sigma)
    sqrt_sigma = (eigvecs * np.sqrt(np.clip(eigvals, 0.0, None))) @ eigvecs.T
    m = sqrt_sigma @ (-omega @ sigma @ omega) @ sqrt_sigma
    vals = np.sort(np.sqrt(np.clip(np.linalg.eigvalsh(m), 0.0, None)))
    return 0.5 * (vals[::2] + vals[1::2])


def is_physical(cm) -> bool:
    """True when sigma + i Omega >= 0, i.e. every symplectic eigenvalue >= 1."""
    try:
        sigma = _as_sigma(cm)
    except DimensionError:
        return False
    if np.max(np.abs(sigma - sigma.T)) > 1e-10 * max(1.0, np.max(np.abs(sigma))):
        return False
    if np.linalg.eigvalsh(sigma)[0] <= 0.0:
        return False
    try:
        spectrum = symplectic_spectrum(sigma)
    except NumericalError:
        return False
    return bool(np.min(spectrum) >= 1.0 - PHYSICALITY_TOL)


@dataclass(frozen=True)
class CovarianceMatrix:
    """Physical covariance matrix of an N-mode Gaussian state."""

    n_modes: int
    sigma: np.ndarray

    def __post_init__(self):
        sigma = np.asarray(self.sigma, dtype=float)
        if self.n_modes < 1 or self.n_modes > MAX_MODES:
            raise DimensionError(f"n_modes must be in [1, {MAX_MODES}], got {self.n_modes}")
        if sigma.shape != (2 * self.n_modes, 2 * self.n_modes):
            raise DimensionError(
                f"expected shape {(2 * self.n_modes,) * 2}, got {sigma.shape}"
            )
        if np.max(np.abs(sigma - sigma.T)) > SYMMETRY_TOL * max(1.0, np.max(np.abs(sigma))):
            raise StateValidationError("covariance matrix is not symmetric")
        sigma = 0.5 * (sigma + sigma.T)
        if not is_physical(sigma):
            raise UnphysicalStateError("covariance matrix violates the uncertainty relation")
        sigma.setflags(write=False)
        object.__setattr__(self, "sigma", sigma)

    def to_json(self) -> str:
        return json.dumps({"n_modes": self.n_modes, "sigma": self.sigma.tolist()})

    @classmethod
    def from_json(cls, text: str) -> "CovarianceMatrix":
        data = json.loads(text)
        return cls(int(data["n_modes"]), np.array(data["sigma"], dtype=float))


def purity(cm) -> float:
    """Purity mu = 1 / sqrt(det sigma), in (0, 1]."""
    sigma = _as_sigma(cm)
    det = float(np.linalg.det(sigma))
    if det < 1.0 - PHYSICALITY_TOL:
        raise UnphysicalStateError(f"det sigma = {det} < 1")
    return 1.0 / np.sqrt(max(det, 1.0))


def reduced_cm(cm: CovarianceMatrix, modes) -> CovarianceMatrix:
    """Principal submatrix on the selected mode blocks."""
    modes = sorted(set(int(m) for m in modes))
    if not modes:
        raise PartitionError("mode selection must be non-empty")
    if modes[0] < 0 or modes[-1] >= cm.n_modes:
        raise PartitionError(f"mode index out of range for N={cm.n_modes}: {modes}")
    idx = np.array([2 * m + q for m in modes for q in (0, 1)])
    return CovarianceMatrix(len(modes), cm.sigma[np.ix_(idx, idx)])


def partial_transpose_cm(cm: CovarianceMatrix, mode: int) -> np.ndarray:
    """Mirror reflection of the momentum quadrature of one mode.

    Output may be unphysical, so a raw array is returned.
    """
    if mode < 0 or mode >= cm.n_modes:
        raise PartitionError(f"mode {mode} out of range for N={cm.n_modes}")
    p = np.ones(2 * cm.n_modes)
    p[2 * mode + 1] = -1.0
    return cm.sigma * np.outer(p, p)


def two_mode_squeezed(r: float) -> CovarianceMatrix:
    """Two-mode squeezed vacuum with squeezing parameter r >= 0."""
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    c, s = np.cosh(2.0 * r), np.sinh(2.0 * r)
    off = np.diag([s, -s])
    sigma = np.block([[c * np.eye(2), off], [off, c * np.eye(2)]])
    return CovarianceMatrix(2, sigma)


def ghzw_three_mode(r: float) -> CovarianceMatrix:
    """Fully symmetric pure three-mode squeezed state family.

    One momentum-squeezed and two position-squeezed vacua (equal squeezing r)
    are combined on a balanced three-mode passive network whose first column
    is (1,1,1)/sqrt(3); that column choice makes the output invariant under
    any permutation of the output modes.
    """
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    u1 = np.full(3, 1.0 / np.sqrt(3.0))
    ep, em = np.exp(2.0 * r), np.exp(-2.0 * r)
    sigma_x = em * np.eye(3) + (ep - em) * np.outer(u1, u1)
    sigma_p = ep * np.eye(3) + (em - ep) * np.outer(u1, u1)
    sigma = np.zeros((6, 6))
    sigma[0::2, 0::2] = sigma_x
    sigma[1::2, 1::2] = sigma_p
    return CovarianceMatrix(3, sigma)


def orthogonal_symplectic_from_unitary(u: np.ndarray) -> np.ndarray:
    """Image of an N x N unitary as a 2N x 2N orthogonal symplectic matrix."""
    u = np.asarray(u, dtype=complex)
    n = u.shape[0]
    x, y = u.real, u.imag
    k = np.zeros((2 * n, 2 * n))
    k[0::2, 0::2] = x
    k[0::2, 1::2] = -y
    k[1::2, 0::2] = y
    k[1::2, 1::2] = x
    return k


def squeezing_matrix(z: np.ndarray) -> np.ndarray:
    """Diagonal squeezer diag(e^{z_1}, e^{-z_1}, ...) for per-mode parameters z."""
    z = np.asarray(z, dtype=float)
    return np.diag(np.repeat(np.exp(z), 2) ** np.tile([1.0, -1.0], z.size))


def random_symplectic(n_modes: int, r_max: float, rng: np.random.Generator) -> np.ndarray:
    """S = K1 Z K2 with Haar-random passive parts and uniform squeezings."""
    k1 = orthogonal_symplectic_from_unitary(haar_unitary(n_modes, rng))
    k2 = orthogonal_symplectic_from_unitary(haar_unitary(n_modes, rng))
    z = rng.uniform(0.0, r_max, size=n_modes)
    return k1 @ squeezing_matrix(z) @ k2


def random_pure_cm(n_modes: int, r_max: float, seed) -> CovarianceMatrix:
    """Random pure Gaussian state sigma = S^T S."""
    if r_max <= 0:
        raise ValueError(f"r_max must be positive, got {r_max}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    s = random_symplectic(n_modes, r_max, rng)
    return CovarianceMatrix(n_modes, s.T @ s)


def random_mixed_cm(n_modes: int, r_max: float, n_max: float, seed) -> CovarianceMatrix:
    """Random mixed Gaussian state sigma = S^T nu S with n_k uniform on [1, n_max]."""
    if r_max <= 0 or n_max < 1:
        raise ValueError(f"need r_max > 0 and n_max >= 1, got {r_max}, {n_max}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    s = random_symplectic(n_modes, r_max, rng)
    nu = np.repeat(rng.uniform(1.0, n_max, size=n_modes), 2)
    return CovarianceMatrix(n_modes, s.T @ (nu[:, None] * s))


def williamson(cm) -> tuple[np.ndarray, np.ndarray]:
    """Williamson normal form: returns (S, n) with sigma = S^T diag(n kron (1,1)) S.

    S is symplectic and n holds the symplectic eigenvalues in the block
    order of the decomposition.
    """
    sigma = _as_sigma(cm)
    n = sigma.shape[0] // 2
    omega = symplectic_form(n)
    eigvals, eigvecs = np.linalg.eigh(sigma)
    if eigvals[0] <= 0.0:
        raise UnphysicalStateError("sigma must be positive definite")
    sqrt_sigma = (eigvecs * np.sqrt(eigvals)) @ eigvecs.T
    inv_sqrt = (eigvecs / np.sqrt(eigvals)) @ eigvecs.T
    a = inv_sqrt @ omega @ inv_sqrt
    t, q = scipy.linalg.schur(a, output="real")
    # Antisymmetric real Schur form consists of 2x2 blocks [[0, w], [-w, 0]];
    # orient every block so the upper-right entry is positive.
    for i in range(n):
        if t[2 * i, 2 * i + 1] < 0.0:
            q[:, [2 * i, 2 * i + 1]] = q[:, [2 * i + 1, 2 * i]]
            t[[2 * i, 2 * i + 1], :] = t[[2 * i + 1, 2 * i], :]
            t[:, [2 * i, 2 * i + 1]] = t[:, [2 * i + 1, 2 * i]]
    freqs = np.array([t[2 * i, 2 * i + 1] for i in range(n)])
    if np.any(freqs <= 0.0):
        raise NumericalError("failed to orient Williamson blocks")
    nvals = 1.0 / freqs
    scale = np.repeat(1.0 / np.sqrt(nvals), 2)
    s = (sqrt_sigma @ q @ np.diag(scale)).T
    return s, nvals
