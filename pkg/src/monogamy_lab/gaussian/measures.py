"""Continuous-variable entanglement measures on Gaussian covariance matrices.

All logarithms are base 2, so contangle values are squared base-2
logarithmic negativities.  The Gaussian contangle of a mixed state is the
infimum of the pure-state contangle over pure covariance matrices sitting
below the state; it is evaluated by penalized derivative-free minimization
over an explicit chart of the pure-state manifold, anchored by the always
feasible Williamson candidate S^T S.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.optimize

from ..errors import NumericalError, PartitionError, PurityError, UnphysicalStateError
from .cm import (
    CovarianceMatrix,
    ghzw_three_mode,
    is_physical,
    orthogonal_symplectic_from_unitary,
    partial_transpose_cm,
    purity,
    reduced_cm,
    symplectic_spectrum,
    williamson,
)

PURITY_TOL = 1e-8
FEASIBILITY_TOL = 1e-9
TIE_BREAK_TOL = 1e-10

DEFAULT_RESTARTS_TWO_MODE = 24
DEFAULT_RESTARTS_ONE_VS_TWO = 32


def log_negativity(cm: CovarianceMatrix, mode: int) -> float:
    """E_N = -sum over partially transposed symplectic eigenvalues below 1 of log2."""
    spectrum = symplectic_spectrum(partial_transpose_cm(cm, mode))
    below = spectrum[spectrum < 1.0]
    if below.size == 0:
        return 0.0
    return float(-np.sum(np.log2(below)))


def negativity_gaussian(cm: CovarianceMatrix, mode: int) -> float:
    """N = (||rho_pt||_1 - 1) / 2 with the trace norm from the PT spectrum."""
    spectrum = symplectic_spectrum(partial_transpose_cm(cm, mode))
    below = spectrum[spectrum < 1.0]
    trace_norm = float(np.prod(1.0 / below)) if below.size else 1.0
    return 0.5 * (trace_norm - 1.0)


@dataclass(frozen=True)
class ContangleReport:
    """Result of a contangle evaluation for one bipartition."""

    bipartition: tuple
    value: float
    method: str  # "pure_closed_form" or "gaussian_roof_minimization"
    optimizer_info: dict = field(default_factory=dict)


def _contangle_from_local_det(det_focus: float) -> float:
    # E_tau of a pure state via its focus-mode local purity mu = 1/sqrt(det):
    # log2^2(1/mu - sqrt(1/mu^2 - 1)).
    m = np.sqrt(max(det_focus, 1.0))
    return float(np.log2(m + np.sqrt(m * m - 1.0)) ** 2)


def contangle_pure(cm: CovarianceMatrix, mode: int) -> ContangleReport:
    """Contangle of a pure state for the (mode | rest) bipartition; closed form."""
    mu_global = purity(cm)
    if abs(mu_global - 1.0) > PURITY_TOL:
        raise PurityError(
            f"global purity {mu_global} is not 1; use gaussian_contangle for mixed states"
        )
    if mode < 0 or mode >= cm.n_modes:
        raise PartitionError(f"mode {mode} out of range for N={cm.n_modes}")
    block = cm.sigma[2 * mode : 2 * mode + 2, 2 * mode : 2 * mode + 2]
    det = float(np.linalg.det(block))
    rest = tuple(j for j in range(cm.n_modes) if j != mode)
    return ContangleReport(
        bipartition=(mode, rest), value=_contangle_from_local_det(det),
        method="pure_closed_form",
    )


# ---------------------------------------------------------------------------
# Pure covariance matrix chart used by the roof minimization.
#
# Every pure N-mode state has a Gaussian wavefunction exp(i x^T W x / 2)
# with W = X + iY, X symmetric and Y positive definite, and its CM (in
# xxpp ordering) is [[Y^-1, Y^-1 X], [X Y^-1, Y + X Y^-1 X]].  Charting X
# by its upper triangle and Y by a Cholesky factor gives an unconstrained,
# non-redundant parametrization of the whole pure-state manifold.

MAX_SQUEEZE = 6.0
CHART_PARAM_BOUND = 25.0
CHART_PURITY_TOL = 1e-6


def _perm_to_xxpp(n_modes: int) -> np.ndarray:
    p = np.zeros((2 * n_modes, 2 * n_modes))
    for m in range(n_modes):
        p[m, 2 * m] = 1.0
        p[n_modes + m, 2 * m + 1] = 1.0
    return p


_PERMS = {n: _perm_to_xxpp(n) for n in (2, 3)}
_TRIU = {n: np.triu_indices(n) for n in (2, 3)}


def pure_cm_param_count(n_modes: int) -> int:
    return n_modes * (n_modes + 1)


def pure_cm_from_params(n_modes: int, params: np.ndarray) -> np.ndarray:
    params = np.asarray(params, dtype=float)
    k = n_modes * (n_modes + 1) // 2
    rows, cols = _TRIU[n_modes]
    x_mat = np.zeros((n_modes, n_modes))
    x_mat[rows, cols] = params[:k]
    x_mat = x_mat + np.triu(x_mat, 1).T
    chol = np.zeros((n_modes, n_modes))
    chol[rows, cols] = params[k:]
    chol = chol.T  # lower triangular
    diag = np.arange(n_modes)
    chol[diag, diag] = np.exp(np.clip(chol[diag, diag], -MAX_SQUEEZE, MAX_SQUEEZE))
    y_mat = chol @ chol.T
    y_inv = np.linalg.inv(y_mat)
    s_xxpp = np.block(
        [[y_inv, y_inv @ x_mat], [x_mat @ y_inv, y_mat + x_mat @ y_inv @ x_mat]]
    )
    perm = _PERMS[n_modes]
    return perm.T @ s_xxpp @ perm


def _roof_objective(params, sigma, n_modes, focus):
    sigma_p = pure_cm_from_params(n_modes, params)
    block = sigma_p[2 * focus : 2 * focus + 2, 2 * focus : 2 * focus + 2]
    det = block[0, 0] * block[1, 1] - block[0, 1] * block[1, 0]
    value = _contangle_from_local_det(det)
    gap = np.linalg.eigvalsh(sigma - sigma_p)[0]
    if gap < 0.0:
        value += 1e4 * (-gap) + 1e7 * gap * gap
    return value


def _anchor_value(sigma: np.ndarray, focus: int) -> float:
    """Contangle of the always-feasible Williamson candidate S^T S <= sigma."""
    s_w, _ = williamson(sigma)
    anchor = s_w.T @ s_w
    block = anchor[2 * focus : 2 * focus + 2, 2 * focus : 2 * focus + 2]
    return _contangle_from_local_det(float(np.linalg.det(block)))


def _standard_form_basis(sigma: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Local symplectic L with L sigma L^T in two-mode standard form.

    Feasibility and the contangle value are invariant under the congruence,
    so the roof can be minimized in the standard-form basis.
    """
    blocks = []
    for m in (0, 1):
        a_blk = sigma[2 * m : 2 * m + 2, 2 * m : 2 * m + 2]
        a = np.sqrt(np.linalg.det(a_blk))
        w, v = np.linalg.eigh(a_blk / a)
        loc = (v * np.sqrt(w)) @ v.T  # symmetric, det 1, hence symplectic
        blocks.append(np.linalg.inv(loc))
    l0 = np.zeros((4, 4))
    l0[:2, :2], l0[2:, 2:] = blocks
    s1 = l0 @ sigma @ l0.T
    u, _, vt = np.linalg.svd(s1[:2, 2:])
    if np.linalg.det(u) < 0:
        u[:, 1] *= -1.0
    if np.linalg.det(vt) < 0:
        vt[1, :] *= -1.0
    rot = np.zeros((4, 4))
    rot[:2, :2], rot[2:, 2:] = u.T, vt
    l_full = rot @ l0
    return l_full, l_full @ sigma @ l_full.T


def _tms_aligned(x: np.ndarray) -> np.ndarray:
    """Pure two-mode CM: TMS(r) conjugated by per-mode diagonal squeezers."""
    r, l1, l2 = np.clip(x, -MAX_SQUEEZE, MAX_SQUEEZE)
    c, s = np.cosh(2.0 * r), np.sinh(2.0 * r)
    off = np.diag([s, -s])
    base = np.block([[c * np.eye(2), off], [off, c * np.eye(2)]])
    loc = np.diag(np.exp([l1, -l1, l2, -l2]))
    return loc @ base @ loc.T


def _chart_search(
    sigma: np.ndarray,
    n_modes: int,
    focus: int,
    n_restarts: int,
    rng: np.random.Generator,
    info: dict,
    best: float,
) -> float:
    """Screened Nelder-Mead penalty descents over the pure-state chart,
    each followed by an SLSQP polish against the exact PSD constraint."""
    n_params = pure_cm_param_count(n_modes)
    blk = slice(2 * focus, 2 * focus + 2)

    def chart_value(x):
        b = pure_cm_from_params(n_modes, x)[blk, blk]
        return _contangle_from_local_det(b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0])

    def chart_gaps(x):
        return np.linalg.eigvalsh(sigma - pure_cm_from_params(n_modes, x))

    def chart_is_pure(x):
        # Extreme parameters make the chart numerically degenerate: the
        # matrix is no longer a pure physical CM, so its value and
        # feasibility are meaningless.  Reject such candidates.
        spectrum = symplectic_spectrum(pure_cm_from_params(n_modes, x))
        return bool(np.max(np.abs(spectrum - 1.0)) <= CHART_PURITY_TOL)

    constraint = {"type": "ineq", "fun": chart_gaps}
    polish_bounds = [(-CHART_PARAM_BOUND, CHART_PARAM_BOUND)] * n_params
    for _ in range(n_restarts):
        if best < 1e-12:
            break
        pool = rng.normal(scale=rng.uniform(0.3, 1.2), size=(50, n_params))
        screened = min(pool, key=lambda x: _roof_objective(x, sigma, n_modes, focus))
        result = scipy.optimize.minimize(
            _roof_objective, screened, args=(sigma, n_modes, focus),
            method="Nelder-Mead",
            options={"maxfev": 1200, "xatol": 1e-8, "fatol": 1e-11},
        )
        info["iterations"] += int(result.nfev)
        candidates = [result.x]
        try:
            polish = scipy.optimize.minimize(
                chart_value, result.x, method="SLSQP", constraints=[constraint],
                bounds=polish_bounds, options={"maxiter": 120, "ftol": 1e-14},
            )
            candidates.append(polish.x)
        except (ValueError, np.linalg.LinAlgError):
            pass
        for x in candidates:
            gap = float(chart_gaps(x)[0])
            if gap >= -FEASIBILITY_TOL and chart_value(x) < best and chart_is_pure(x):
                best = chart_value(x)
                info["achieved_feasibility"] = gap
    return best


def _is_ppt(cm: CovarianceMatrix, focus: int) -> bool:
    spectrum = symplectic_spectrum(partial_transpose_cm(cm, focus))
    return bool(np.min(spectrum) >= 1.0 - FEASIBILITY_TOL)


def _minimize_two_mode(sigma: np.ndarray, restarts: int, seed) -> tuple[float, dict]:
    """Gaussian roof for a two-mode state: inf of E_tau over pure sigma_p <= sigma.

    Candidates: the Williamson anchor S^T S (always feasible), constrained
    minimization over the standard-form-aligned TMS family, and chart-wide
    penalty descents.  Works in the standard-form basis, where both the
    value and feasibility are invariant.
    """
    best = _anchor_value(sigma, 0)
    info = {"restarts": restarts, "iterations": 0, "achieved_feasibility": 0.0,
            "anchor_value": best}
    if best < 1e-12:
        return best, info
    _, sf = _standard_form_basis(sigma)
    rng = np.random.default_rng(seed)

    def aligned_value(x):
        b = _tms_aligned(x)
        return _contangle_from_local_det(b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0])

    def aligned_gaps(x):
        return np.linalg.eigvalsh(sf - _tms_aligned(x))

    n_aligned = max(2, min(restarts // 2, 6))
    starts = [np.array([0.3, 0.0, 0.0]), np.array([0.8, 0.3, -0.3])]
    starts += [rng.normal(scale=0.5, size=3) for _ in range(max(0, n_aligned - 2))]
    constraint = {"type": "ineq", "fun": aligned_gaps}
    for x0 in starts[:n_aligned]:
        try:
            result = scipy.optimize.minimize(
                aligned_value, x0, method="SLSQP", constraints=[constraint],
                bounds=[(-4.0, 4.0)] * 3, options={"maxiter": 120, "ftol": 1e-14},
            )
        except (ValueError, np.linalg.LinAlgError):
            continue
        info["iterations"] += int(result.nit)
        gap = float(aligned_gaps(result.x)[0])
        if gap >= -FEASIBILITY_TOL and aligned_value(result.x) < best:
            best = aligned_value(result.x)
            info["achieved_feasibility"] = gap
        if best < 1e-12:
            return best, info

    best = _chart_search(sf, 2, 0, max(restarts - n_aligned, 2), rng, info, best)
    return best, info


def _minimize_one_vs_two(
    sigma: np.ndarray, focus: int, restarts: int, seed
) -> tuple[float, dict]:
    """Gaussian roof for the (focus | rest) bipartition of a three-mode state."""
    best = _anchor_value(sigma, focus)
    info = {"restarts": restarts, "iterations": 0, "achieved_feasibility": 0.0,
            "anchor_value": best}
    if best < 1e-12:
        return best, info
    rng = np.random.default_rng(seed)
    best = _chart_search(sigma, 3, focus, restarts, rng, info, best)
    return best, info


def gaussian_contangle(
    cm: CovarianceMatrix,
    restarts: int = DEFAULT_RESTARTS_TWO_MODE,
    seed=0,
) -> ContangleReport:
    """Gaussian contangle of a two-mode state (mode 0 | mode 1 bipartition)."""
    if cm.n_modes != 2:
        raise PartitionError(f"need a two-mode state, got N={cm.n_modes}")
    if abs(purity(cm) - 1.0) <= PURITY_TOL:
        return contangle_pure(cm, 0)
    if _is_ppt(cm, 0):
        # For 1x1-mode Gaussian states, a positive partial transpose implies
        # separability, and separable states have a vanishing contangle roof.
        return ContangleReport(
            bipartition=(0, (1,)), value=0.0, method="gaussian_roof_minimization",
            optimizer_info={"restarts": 0, "iterations": 0,
                            "achieved_feasibility": 0.0, "ppt_separable": True},
        )
    value, info = _minimize_two_mode(cm.sigma, restarts, seed)
    return ContangleReport(
        bipartition=(0, (1,)), value=value, method="gaussian_roof_minimization",
        optimizer_info=info,
    )


def gaussian_contangle_one_vs_rest(
    cm: CovarianceMatrix,
    focus: int,
    restarts: int = DEFAULT_RESTARTS_ONE_VS_TWO,
    seed=0,
) -> ContangleReport:
    """Gaussian contangle of a three-mode state for the (focus | rest) bipartition.

    Pure inputs short-circuit to the closed form; mixed inputs run the roof
    minimization over pure three-mode covariance matrices.
    """
    if cm.n_modes != 3:
        raise PartitionError(f"need a three-mode state, got N={cm.n_modes}")
    rest = tuple(j for j in range(3) if j != focus)
    if abs(purity(cm) - 1.0) <= PURITY_TOL:
        return contangle_pure(cm, focus)
    if _is_ppt(cm, focus):
        # PPT is also conclusive for 1x2-mode bipartitions of Gaussian states.
        return ContangleReport(
            bipartition=(focus, rest), value=0.0,
            method="gaussian_roof_minimization",
            optimizer_info={"restarts": 0, "iterations": 0,
                            "achieved_feasibility": 0.0, "ppt_separable": True},
        )
    value, info = _minimize_one_vs_two(cm.sigma, focus, restarts, seed)
    return ContangleReport(
        bipartition=(focus, rest), value=value,
        method="gaussian_roof_minimization", optimizer_info=info,
    )


@dataclass(frozen=True)
class GaussianMonogamyReport:
    """Residual-contangle decomposition of a three-mode state for every focus."""

    per_focus: dict
    minimum_residual: float
    argmin_focus: int
    failures: tuple = ()

    def to_json_dict(self) -> dict:
        return {
            "per_focus": {
                str(i): {
                    "one_vs_rest": d["one_vs_rest"],
                    "pairwise": {str(j): v for j, v in sorted(d["pairwise"].items())},
                    "residual": d["residual"],
                }
                for i, d in sorted(self.per_focus.items())
            },
            "minimum_residual": self.minimum_residual,
            "argmin_focus": self.argmin_focus,
        }


def residual_gaussian_contangle(
    cm: CovarianceMatrix,
    restarts_pairwise: int = DEFAULT_RESTARTS_TWO_MODE,
    restarts_one_vs_rest: int = DEFAULT_RESTARTS_ONE_VS_TWO,
    seed=0,
) -> GaussianMonogamyReport:
    """Minimum residual Gaussian contangle of a three-mode state."""
    if cm.n_modes != 3:
        raise PartitionError(f"need a three-mode state, got N={cm.n_modes}")
    base = np.random.SeedSequence(seed).generate_state(16)
    pair_values = {}
    failures = []
    for k, (i, j) in enumerate(((0, 1), (0, 2), (1, 2))):
        pair_cm = reduced_cm(cm, [i, j])
        try:
            # Focus index inside the reduction is 0 for mode i, 1 for mode j;
            # the two-mode value is bipartition-symmetric, so one run serves both.
            report = gaussian_contangle(pair_cm, restarts_pairwise, seed=base[k])
            pair_values[(i, j)] = report.value
        except NumericalError:
            failures.append((i, j))
            pair_values[(i, j)] = np.nan
    per_focus = {}
    for i in range(3):
        try:
            ovr = gaussian_contangle_one_vs_rest(
                cm, i, restarts_one_vs_rest, seed=base[4 + i]
            ).value
        except NumericalError:
            failures.append((i,))
            ovr = np.nan
        pairwise = {
            j: pair_values[tuple(sorted((i, j)))] for j in range(3) if j != i
        }
        per_focus[i] = {
            "one_vs_rest": ovr,
            "pairwise": pairwise,
            "residual": ovr - sum(pairwise.values()),
        }
    residuals = np.array([per_focus[i]["residual"] for i in range(3)])
    if np.any(np.isnan(residuals)):
        raise NumericalError(f"optimizer failed on bipartitions {failures}")
    argmin = 0
    for i in (1, 2):
        if residuals[i] < residuals[argmin] - TIE_BREAK_TOL:
            argmin = i
    return GaussianMonogamyReport(
        per_focus=per_focus,
        minimum_residual=float(residuals[argmin]),
        argmin_focus=argmin,
        failures=tuple(failures),
    )


def promiscuity_sweep(
    r_grid,
    restarts_pairwise: int = DEFAULT_RESTARTS_TWO_MODE,
    seed=0,
) -> list[dict]:
    """Pairwise and tripartite contangle of the symmetric GHZ/W family on a grid.

    Each row holds the Gaussian contangle of a two-mode reduction, the
    one-vs-rest pure contangle, and the minimum residual contangle.
    """
    rows = []
    for k, r in enumerate(r_grid):
        if r < 0:
            raise ValueError(f"squeezing must be non-negative, got {r}")
        cm = ghzw_three_mode(r)
        one_vs_rest = contangle_pure(cm, 0).value
        pair = gaussian_contangle(
            reduced_cm(cm, [0, 1]), restarts_pairwise, seed=[seed, k]
        ).value
        # Fully symmetric: every focus decomposes identically.
        rows.append(
            {
                "r": float(r),
                "pairwise_gtau": pair,
                "one_vs_rest_etau": one_vs_rest,
                "min_residual": one_vs_rest - 2.0 * pair,
                "argmin_focus": 0,
            }
        )
    return rows
