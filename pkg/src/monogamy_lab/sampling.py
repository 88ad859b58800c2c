"""Seeded random-state sampling helpers.

Per-trial generators are derived from (seed, trial_index) so a campaign of
T trials produces the same states as T single-trial campaigns, regardless
of execution order.
"""

from __future__ import annotations

import numpy as np

from .qubit.states import QubitPureState


def trial_rng(seed: int, trial_index: int) -> np.random.Generator:
    """Independent generator for one trial of a seeded campaign."""
    return np.random.default_rng([int(seed), int(trial_index)])


def haar_random_pure_state(n_qubits: int, rng: np.random.Generator) -> QubitPureState:
    """Haar-random pure state: normalized vector of standard complex Gaussians."""
    dim = 2**n_qubits
    z = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    z /= np.linalg.norm(z)
    return QubitPureState(n_qubits, z)


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed n x n unitary via QR of a complex Ginibre matrix."""
    z = (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases
