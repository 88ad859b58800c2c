"""Tests for the multi-qubit state representations and reductions."""

import numpy as np
import pytest

from monogamy_lab.errors import PartitionError, StateValidationError
from monogamy_lab.qubit.states import (
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
from monogamy_lab.canonical import bell_state, ghz_state, w_state
from monogamy_lab.sampling import haar_random_pure_state, trial_rng


def random_density_matrix(n_qubits, rng):
    # mixed state as the reduction of a Haar pure state on twice the qubits
    psi = haar_random_pure_state(2 * n_qubits, rng)
    return reduced_density_matrix(psi, tuple(range(n_qubits)))


class TestConstruction:
    def test_zero_state_projector(self):
        psi = QubitPureState(1, np.array([1.0, 0.0]))
        np.testing.assert_allclose(
            to_density_matrix(psi).matrix, [[1, 0], [0, 0]], atol=1e-15
        )

    def test_bell_projector_corners(self):
        rho = to_density_matrix(bell_state()).matrix
        expected = np.zeros((4, 4))
        for i, j in ((0, 0), (0, 3), (3, 0), (3, 3)):
            expected[i, j] = 0.5
        np.testing.assert_allclose(rho, expected, atol=1e-15)

    def test_haar_projector_is_pure(self):
        for trial in range(20):
            psi = haar_random_pure_state(3, trial_rng(11, trial))
            rho = to_density_matrix(psi)
            assert abs(purity(rho) - 1.0) < 1e-12

    def test_norm_violation_rejected(self):
        with pytest.raises(StateValidationError):
            QubitPureState(1, np.array([1.0, 1.0]))

    def test_density_matrix_invariants_enforced(self):
        with pytest.raises(StateValidationError):
            DensityMatrix(1, np.array([[0.7, 0.1j], [0.2j, 0.3]]))  # not Hermitian
        with pytest.raises(StateValidationError):
            DensityMatrix(1, np.eye(2))  # trace 2

    def test_json_round_trip(self):
        psi = haar_random_pure_state(2, trial_rng(5, 0))
        back = QubitPureState.from_json(psi.to_json())
        np.testing.assert_allclose(back.amplitudes, psi.amplitudes, atol=1e-15)


class TestPartialTrace:
    def test_bell_marginal_maximally_mixed(self):
        rho = to_density_matrix(bell_state())
        reduced = partial_trace(rho, QubitPartition.keep((0,), 2))
        np.testing.assert_allclose(reduced.matrix, np.eye(2) / 2, atol=1e-14)

    def test_product_state_marginal(self):
        rho = to_density_matrix(QubitPureState(3, np.eye(8)[0]))
        reduced = partial_trace(rho, QubitPartition.keep((0, 1), 3))
        expected = np.zeros((4, 4))
        expected[0, 0] = 1.0
        np.testing.assert_allclose(reduced.matrix, expected, atol=1e-14)

    def test_w_state_two_qubit_reduction(self):
        # Tr_C |W><W| = (1/3)|00><00| + (2/3)|Psi+><Psi+|
        reduced = reduced_density_matrix(w_state(), (0, 1))
        psi_plus = np.array([0.0, 1.0, 1.0, 0.0]) / np.sqrt(2.0)
        expected = np.zeros((4, 4))
        expected[0, 0] = 1.0 / 3.0
        expected += (2.0 / 3.0) * np.outer(psi_plus, psi_plus)
        np.testing.assert_allclose(reduced.matrix, expected, atol=1e-14)

    def test_reductions_stay_valid_states(self):
        for trial in range(50):
            psi = haar_random_pure_state(4, trial_rng(21, trial))
            rho = to_density_matrix(psi)
            for kept in ((0,), (1, 3), (0, 1, 2)):
                reduced = partial_trace(rho, QubitPartition.keep(kept, 4))
                assert abs(np.trace(reduced.matrix).real - 1.0) < 1e-12
                assert np.linalg.eigvalsh(reduced.matrix).min() >= -1e-10

    def test_partition_validation(self):
        with pytest.raises(PartitionError):
            QubitPartition.keep((), 2)
        with pytest.raises(PartitionError):
            QubitPartition.keep((0, 3), 2)


class TestPartialTranspose:
    def test_bell_spectrum(self):
        rho = to_density_matrix(bell_state())
        evals = np.sort(np.linalg.eigvalsh(partial_transpose(rho, {1})))
        np.testing.assert_allclose(evals, [-0.5, 0.5, 0.5, 0.5], atol=1e-12)

    def test_product_state_unchanged(self):
        rho = to_density_matrix(QubitPureState(2, np.eye(4)[0]))
        np.testing.assert_allclose(partial_transpose(rho, {0}), rho.matrix, atol=1e-15)

    def test_involution_and_trace_on_random_states(self):
        for trial in range(1000):
            rng = trial_rng(33, trial)
            rho = random_density_matrix(2, rng)
            subsystem = {int(rng.integers(2))}
            pt = partial_transpose(rho, subsystem)
            assert abs(np.trace(pt).real - 1.0) < 1e-12
            # transpose the same qubit again by a raw axis swap: must recover rho
            q = next(iter(subsystem))
            order = [0, 1, 2, 3]
            order[q], order[2 + q] = order[2 + q], order[q]
            twice = np.transpose(pt.reshape(2, 2, 2, 2), order).reshape(4, 4)
            np.testing.assert_allclose(twice, rho.matrix, atol=1e-14)

    def test_full_or_empty_subsystem_rejected(self):
        rho = to_density_matrix(bell_state())
        with pytest.raises(PartitionError):
            partial_transpose(rho, set())
        with pytest.raises(PartitionError):
            partial_transpose(rho, {0, 1})


class TestEntropies:
    def test_pure_state_entropy_zero(self):
        rho = to_density_matrix(ghz_state())
        assert von_neumann_entropy(rho) < 1e-12

    def test_maximally_mixed_qubit(self):
        rho = DensityMatrix(1, np.eye(2) / 2)
        assert abs(von_neumann_entropy(rho) - 1.0) < 1e-12
        assert abs(linear_entropy(rho) - 0.5) < 1e-12

    def test_diagonal_three_quarters(self):
        rho = DensityMatrix(1, np.diag([0.75, 0.25]))
        expected = -(0.75 * np.log2(0.75) + 0.25 * np.log2(0.25))
        assert abs(von_neumann_entropy(rho) - expected) < 1e-12
        assert abs(expected - 0.8112781244591328) < 1e-12
        assert abs(linear_entropy(rho) - 0.375) < 1e-12

    def test_linear_entropy_pure(self):
        assert linear_entropy(to_density_matrix(bell_state())) < 1e-12

    def test_linear_entropy_range(self):
        for trial in range(200):
            rho = random_density_matrix(2, trial_rng(44, trial))
            s = linear_entropy(rho)
            assert -1e-12 <= s <= 1.0 - 0.25 + 1e-12

    def test_schmidt_symmetry(self):
        # both marginals of a pure bipartite state carry the same entropy
        for trial in range(200):
            psi = haar_random_pure_state(3, trial_rng(55, trial))
            sa = von_neumann_entropy(reduced_density_matrix(psi, (0,)))
            sb = von_neumann_entropy(reduced_density_matrix(psi, (1, 2)))
            assert abs(sa - sb) < 1e-10
