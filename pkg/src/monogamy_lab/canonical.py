"""Canonical benchmark states used by the CLI and the test suite."""

import numpy as np

from .gaussian.cm import CovarianceMatrix, ghzw_three_mode, two_mode_squeezed
from .qubit.states import QubitPureState


def bell_state() -> QubitPureState:
    """(|00> + |11>) / sqrt(2)."""
    amps = np.zeros(4, dtype=complex)
    amps[0] = amps[3] = 1.0 / np.sqrt(2.0)
    return QubitPureState(2, amps)


def ghz_state(n_qubits: int = 3) -> QubitPureState:
    """(|0...0> + |1...1>) / sqrt(2) on n qubits."""
    amps = np.zeros(2**n_qubits, dtype=complex)
    amps[0] = amps[-1] = 1.0 / np.sqrt(2.0)
    return QubitPureState(n_qubits, amps)


def w_state(n_qubits: int = 3) -> QubitPureState:
    """Equal superposition of the n single-excitation basis states."""
    amps = np.zeros(2**n_qubits, dtype=complex)
    for k in range(n_qubits):
        amps[1 << k] = 1.0 / np.sqrt(n_qubits)
    return QubitPureState(n_qubits, amps)


# Registry consumed by `monogamy-lab gen`.  CV entries take the squeezing
# parameter r; qubit entries ignore it.
QUBIT_STATES = {
    "bell": bell_state,
    "ghz": lambda: ghz_state(3),
    "w": lambda: w_state(3),
    "ghz4": lambda: ghz_state(4),
    "w4": lambda: w_state(4),
}

CV_STATES = {
    "tms": two_mode_squeezed,
    "ghzw-cv": ghzw_three_mode,
}


def generate(name: str, r: float = 0.5):
    """Build a canonical state by name; returns QubitPureState or CovarianceMatrix."""
    if name in QUBIT_STATES:
        return QUBIT_STATES[name]()
    if name in CV_STATES:
        return CV_STATES[name](r)
    raise KeyError(name)
