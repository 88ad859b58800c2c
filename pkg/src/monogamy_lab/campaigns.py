"""Seeded Monte Carlo campaigns verifying the monogamy inequalities.

Each trial derives its randomness from (seed, trial_index), so the per-trial
results are independent of execution order and of the number of workers.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .gaussian.cm import random_mixed_cm, random_pure_cm
from .gaussian.measures import residual_gaussian_contangle
from .qubit.measures import _concurrence, pure_tangle_one_vs_rest
from .qubit.states import _reduced_from_pure
from .sampling import haar_random_pure_state, trial_rng

THREADS_ENV_VAR = "MONOGAMY_LAB_THREADS"

# Restart budgets for the Gaussian roof inside campaigns.  Pairwise terms
# only push the residual up when under-minimized, so they get a lean budget;
# the one-vs-rest term can fake a violation when under-minimized, so it
# keeps a larger one.
CAMPAIGN_RESTARTS_PAIRWISE = 4
CAMPAIGN_RESTARTS_ONE_VS_REST = 6


@dataclass(frozen=True)
class CampaignConfig:
    """Parameters of one verification campaign."""

    system: str  # "qubits" or "gaussian"
    n_parties: int = 3
    trials: int = 100
    seed: int = 0
    tolerance: float = 1e-9
    r_max: float = 1.5
    n_max: float = 1.0  # 1.0 samples pure Gaussian states; > 1 samples mixed

    def __post_init__(self):
        if self.system not in ("qubits", "gaussian"):
            raise ValueError(f"unknown system {self.system!r}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.n_parties < 3:
            raise ValueError("need at least 3 parties")


@dataclass(frozen=True)
class CampaignSummary:
    """Order-independent reduction of a campaign's per-trial residuals."""

    trials_run: int
    violations: int
    worst_residual: float
    mean_residual: float
    elapsed_seconds: float

    def to_json_dict(self) -> dict:
        # elapsed_seconds is deliberately excluded so that repeated runs
        # with the same seed serialize byte-identically.
        return {
            "trials_run": self.trials_run,
            "violations": self.violations,
            "worst_residual": self.worst_residual,
            "mean_residual": self.mean_residual,
        }


def _qubit_trial(config: CampaignConfig, index: int) -> tuple[float, int]:
    """Minimum CKW residual over all foci of one Haar-random pure state."""
    n = config.n_parties
    psi = haar_random_pure_state(n, trial_rng(config.seed, index))
    amps = psi.amplitudes
    worst = np.inf
    argmin = 0
    for focus in range(n):
        residual = pure_tangle_one_vs_rest(psi, focus)
        for j in range(n):
            if j == focus:
                continue
            pair = _reduced_from_pure(amps, n, (min(focus, j), max(focus, j)))
            c = _concurrence(pair)
            residual -= c * c
        if residual < worst:
            worst = residual
            argmin = focus
    return worst, argmin


def _gaussian_trial(config: CampaignConfig, index: int) -> tuple[float, int]:
    """Minimum residual Gaussian contangle of one random three-mode state."""
    rng = trial_rng(config.seed, index)
    if config.n_max > 1.0:
        cm = random_mixed_cm(3, config.r_max, config.n_max, rng)
    else:
        cm = random_pure_cm(3, config.r_max, rng)
    report = residual_gaussian_contangle(
        cm,
        restarts_pairwise=CAMPAIGN_RESTARTS_PAIRWISE,
        restarts_one_vs_rest=CAMPAIGN_RESTARTS_ONE_VS_REST,
        seed=[config.seed, index],
    )
    return report.minimum_residual, report.argmin_focus


def _worker_count() -> int:
    raw = os.environ.get(THREADS_ENV_VAR, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_campaign(config: CampaignConfig) -> tuple[CampaignSummary, list]:
    """Run all trials; returns the summary and per-trial rows for CSV output.

    Rows are (trial_index, residual, argmin_focus, holds) in trial order.
    """
    trial = _qubit_trial if config.system == "qubits" else _gaussian_trial
    started = time.perf_counter()
    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda i: trial(config, i), range(config.trials)))
    else:
        results = [trial(config, i) for i in range(config.trials)]
    elapsed = time.perf_counter() - started

    rows = [
        (i, residual, focus, residual >= -config.tolerance)
        for i, (residual, focus) in enumerate(results)
    ]
    residuals = np.array([residual for residual, _ in results])
    summary = CampaignSummary(
        trials_run=config.trials,
        violations=int(np.sum(residuals < -config.tolerance)),
        worst_residual=float(np.min(residuals)),
        mean_residual=float(np.mean(residuals)),
        elapsed_seconds=elapsed,
    )
    return summary, rows
