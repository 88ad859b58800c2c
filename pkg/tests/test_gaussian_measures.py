"""Tests for CV entanglement measures and the Gaussian contangle roof."""

import numpy as np
import pytest

from monogamy_lab.errors import PurityError
from monogamy_lab.gaussian.cm import (
    CovarianceMatrix,
    ghzw_three_mode,
    is_physical,
    partial_transpose_cm,
    random_mixed_cm,
    random_pure_cm,
    random_symplectic,
    reduced_cm,
    symplectic_spectrum,
    two_mode_squeezed,
)
from monogamy_lab.gaussian.measures import (
    contangle_pure,
    gaussian_contangle,
    gaussian_contangle_one_vs_rest,
    log_negativity,
    negativity_gaussian,
    promiscuity_sweep,
    residual_gaussian_contangle,
)
from monogamy_lab.gaussian.measures import _minimize_two_mode, _standard_form_basis

from oracles import grid_refine_gtau_oracle

LOG2E = np.log2(np.e)


def thermal_product(*temps):
    return CovarianceMatrix(len(temps), np.diag(np.repeat(temps, 2)).astype(float))


class TestLogNegativity:
    def test_vacuum(self):
        assert log_negativity(CovarianceMatrix(2, np.eye(4)), 0) == 0.0

    def test_tms_closed_form(self):
        for r in (0.1, 0.5, 1.0, 1.5):
            for mode in (0, 1):
                value = log_negativity(two_mode_squeezed(r), mode)
                assert abs(value - 2.0 * r * LOG2E) < 1e-9

    def test_thermal_product_zero(self):
        assert log_negativity(thermal_product(2.0, 3.0), 0) == 0.0

    def test_negativity_consistency(self):
        # N = (2^{E_N} - 1)/2: the two code paths agree
        for trial in range(100):
            cm = random_mixed_cm(2, 1.0, 1.5, trial)
            en = log_negativity(cm, 0)
            n = negativity_gaussian(cm, 0)
            assert abs(n - (2.0**en - 1.0) / 2.0) < 1e-10

    def test_tms_negativity(self):
        r = 0.7
        n = negativity_gaussian(two_mode_squeezed(r), 0)
        assert abs(n - (np.exp(2 * r) - 1.0) / 2.0) < 1e-9


class TestContanglePure:
    def test_product_is_zero(self):
        assert contangle_pure(CovarianceMatrix(2, np.eye(4)), 0).value == 0.0

    def test_tms_closed_form(self):
        for r in (0.2, 0.8, 1.4):
            report = contangle_pure(two_mode_squeezed(r), 0)
            assert abs(report.value - (2.0 * r * LOG2E) ** 2) < 1e-9
            assert report.method == "pure_closed_form"

    def test_equals_squared_log_negativity(self):
        for r in (0.3, 0.7, 1.1):
            cm = ghzw_three_mode(r)
            for mode in range(3):
                e_tau = contangle_pure(cm, mode).value
                assert abs(e_tau - log_negativity(cm, mode) ** 2) < 1e-8

    def test_identity_on_random_pure_states(self):
        for trial in range(100):
            n_modes = 2 + trial % 2
            cm = random_pure_cm(n_modes, 1.2, trial)
            assert abs(contangle_pure(cm, 0).value - log_negativity(cm, 0) ** 2) < 1e-8

    def test_mixed_input_rejected(self):
        with pytest.raises(PurityError):
            contangle_pure(thermal_product(2.0, 2.0), 0)


class TestGaussianContangleTwoMode:
    def test_separable_products(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            temps = rng.uniform(1.0, 3.0, size=2)
            assert gaussian_contangle(thermal_product(*temps)).value <= 1e-7

    def test_pure_input_recovers_closed_form(self):
        for r in (0.2, 0.6, 1.0):
            cm = two_mode_squeezed(r)
            roof = gaussian_contangle(cm).value
            assert abs(roof - contangle_pure(cm, 0).value) < 1e-6

    def test_optimizer_recovers_closed_form_without_shortcut(self):
        # exercise the minimizer itself on pure inputs (the public entry
        # point short-circuits them)
        for trial, r in enumerate((0.3, 0.9)):
            sigma = two_mode_squeezed(r).sigma
            value, _ = _minimize_two_mode(sigma, restarts=6, seed=trial)
            assert abs(value - (2.0 * r * LOG2E) ** 2) < 1e-6

    def test_ghzw_reduction_against_grid_oracle(self):
        cm = reduced_cm(ghzw_three_mode(0.8), [0, 1])
        roof = gaussian_contangle(cm, seed=2).value
        _, sf = _standard_form_basis(cm.sigma)
        oracle = grid_refine_gtau_oracle(sf)
        assert abs(roof - oracle) < 1e-4
        # frozen value derived from the PT spectrum of the symmetric reduction
        assert abs(roof - 0.5416196619436) < 1e-6

    def test_local_symplectic_invariance(self):
        rng = np.random.default_rng(23)
        for trial in range(3):
            cm = reduced_cm(ghzw_three_mode(0.5 + 0.3 * trial), [0, 1])
            base = gaussian_contangle(cm, seed=1).value
            local = np.zeros((4, 4))
            local[:2, :2] = random_symplectic(1, 1.0, rng)
            local[2:, 2:] = random_symplectic(1, 1.0, rng)
            moved = CovarianceMatrix(2, local.T @ cm.sigma @ local)
            assert abs(gaussian_contangle(moved, seed=2).value - base) < 1e-5

    def test_optimizer_info_shape(self):
        report = gaussian_contangle(reduced_cm(ghzw_three_mode(0.4), [0, 1]))
        assert report.method == "gaussian_roof_minimization"
        assert {"restarts", "iterations", "achieved_feasibility"} <= set(
            report.optimizer_info
        )


class TestResidualContangle:
    def test_vacuum_all_zero(self):
        report = residual_gaussian_contangle(CovarianceMatrix(3, np.eye(6)))
        assert report.minimum_residual == 0.0
        for focus in range(3):
            assert report.per_focus[focus]["one_vs_rest"] == 0.0

    def test_tms_with_spectator_mode(self):
        sigma = np.eye(6)
        sigma[:4, :4] = two_mode_squeezed(0.6).sigma
        report = residual_gaussian_contangle(CovarianceMatrix(3, sigma), seed=4)
        assert abs(report.per_focus[2]["residual"]) < 1e-7
        assert abs(report.minimum_residual) < 1e-7

    def test_ghzw_promiscuity(self):
        report = residual_gaussian_contangle(ghzw_three_mode(0.8), seed=6)
        assert report.minimum_residual > 0.0
        for focus in range(3):
            for v in report.per_focus[focus]["pairwise"].values():
                assert v > 0.0

    def test_pure_one_vs_rest_uses_closed_form(self):
        report = gaussian_contangle_one_vs_rest(ghzw_three_mode(0.7), 1)
        assert report.method == "pure_closed_form"

    def test_json_shape(self):
        payload = residual_gaussian_contangle(CovarianceMatrix(3, np.eye(6))).to_json_dict()
        assert set(payload) == {"per_focus", "minimum_residual", "argmin_focus"}
        assert set(payload["per_focus"]) == {"0", "1", "2"}


class TestPromiscuitySweep:
    def test_zero_row(self):
        row = promiscuity_sweep([0.0])[0]
        assert row["pairwise_gtau"] == 0.0
        assert row["one_vs_rest_etau"] == 0.0
        assert row["min_residual"] == 0.0

    def test_monotone_one_vs_rest(self):
        rows = promiscuity_sweep(np.linspace(0.0, 1.5, 6), seed=1)
        values = [row["one_vs_rest_etau"] for row in rows]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_monogamy_on_grid(self):
        for row in promiscuity_sweep(np.linspace(0.1, 1.0, 4), seed=2):
            assert row["min_residual"] >= -1e-7


class TestFrustration:
    def test_separable_reduction_states_have_frustrated_tripartite_entanglement(self):
        # Symmetric three-mode states whose two-mode reductions are all
        # separable carry strictly less tripartite entanglement than the
        # promiscuous symmetric family at equal local single-mode purity.
        ghzw = ghzw_three_mode(0.8)
        ghzw_residual = residual_gaussian_contangle(ghzw, seed=3).minimum_residual
        a = float(np.sqrt(np.linalg.det(ghzw.sigma[:2, :2])))  # local purity 1/a

        def t_state(b1, b2):
            blk_a, blk_b = a * np.eye(2), np.diag([b1, b2])
            return np.block(
                [[blk_a, blk_b, blk_b], [blk_b, blk_a, blk_b], [blk_b, blk_b, blk_a]]
            )

        def pair_is_ppt(sigma):
            p = np.diag([1.0, 1.0, 1.0, -1.0])
            try:
                return min(symplectic_spectrum(p @ sigma[:4, :4] @ p)) >= 1.0 - 1e-9
            except Exception:
                return False

        # coarse search for the strongest one-vs-rest candidate in the family
        best = None
        grid = np.linspace(-a, a, 25)
        for b1 in grid:
            for b2 in grid:
                sigma = t_state(b1, b2)
                if abs(b1) + abs(b2) < 1e-9 or not is_physical(sigma):
                    continue
                if not pair_is_ppt(sigma):
                    continue
                ln = log_negativity(CovarianceMatrix(3, sigma), 0)
                if best is None or ln > best[0]:
                    best = (ln, sigma)
        assert best is not None
        _, sigma = best
        cm = CovarianceMatrix(3, sigma)
        pairwise = gaussian_contangle(reduced_cm(cm, [0, 1]), seed=8).value
        assert pairwise < 1e-6
        frustrated_residual = gaussian_contangle_one_vs_rest(cm, 0, seed=9).value
        assert frustrated_residual < ghzw_residual - 1e-4
