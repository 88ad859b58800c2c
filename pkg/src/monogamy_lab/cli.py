"""Command-line front end: state I/O, measure dispatch, campaigns, sweeps.

Exit codes: 0 success, 2 parse/usage error, 3 dimension or partition
mismatch, 4 I/O failure, 5 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .campaigns import CampaignConfig, run_campaign
from .canonical import CV_STATES, QUBIT_STATES, generate
from .errors import (
    DimensionError,
    NumericalError,
    PartitionError,
    PurityError,
    StateValidationError,
    UnphysicalStateError,
)
from .gaussian.cm import CovarianceMatrix
from .gaussian.measures import (
    contangle_pure,
    gaussian_contangle,
    log_negativity,
    promiscuity_sweep,
    residual_gaussian_contangle,
)
from .qubit.measures import (
    concurrence,
    entanglement_of_formation,
    negativity,
    residual_tangle_three_qubits,
    tangle_two_qubit,
)
from .qubit.states import DensityMatrix, QubitPureState, to_density_matrix

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_IO = 4
EXIT_NUMERICAL = 5

QUBIT_MEASURES = ("concurrence", "tangle", "eof", "negativity", "residual-tangle")
CV_MEASURES = ("log-negativity", "contangle", "gaussian-contangle", "residual-contangle")


def _format_sig12(x: float) -> str:
    """Shortest round-trip decimal capped at 12 significant digits."""
    return repr(float(f"{x:.12g}"))


def _load_state(path: str):
    """Parse a JSON state file into the matching domain object."""
    with open(path) as fh:
        data = json.load(fh)
    if "amplitudes" in data:
        return QubitPureState.from_json(json.dumps(data))
    if "matrix" in data:
        mat = np.array([[complex(re, im) for re, im in row] for row in data["matrix"]])
        return DensityMatrix(int(data["n_qubits"]), mat)
    if "sigma" in data:
        return CovarianceMatrix.from_json(json.dumps(data))
    raise KeyError("state file has none of: amplitudes, matrix, sigma")


def _parse_bipartition(spec: str | None, default=(0,)):
    if spec is None:
        return tuple(default)
    try:
        return tuple(int(tok) for tok in spec.replace(",", " ").split())
    except ValueError as exc:
        raise KeyError(f"cannot parse bipartition {spec!r}") from exc


def _dispatch_measure(state, measure: str, bipartition) -> tuple[float, dict]:
    """Returns (value, detail dict for --json output)."""
    if measure in QUBIT_MEASURES:
        if isinstance(state, CovarianceMatrix):
            raise DimensionError(f"{measure} needs a qubit state, got a covariance matrix")
        if measure == "residual-tangle":
            if not isinstance(state, QubitPureState):
                raise DimensionError("residual-tangle needs a pure state")
            dec = residual_tangle_three_qubits(state, bipartition[0])
            return dec.residual, {
                "one_vs_rest": dec.one_vs_rest,
                "pairwise": {str(j): v for j, v in sorted(dec.pairwise.items())},
            }
        rho = to_density_matrix(state) if isinstance(state, QubitPureState) else state
        if measure == "negativity":
            return negativity(rho, set(bipartition)), {}
        fn = {
            "concurrence": concurrence,
            "tangle": tangle_two_qubit,
            "eof": entanglement_of_formation,
        }[measure]
        return fn(rho), {}

    if not isinstance(state, CovarianceMatrix):
        raise DimensionError(f"{measure} needs a covariance matrix")
    mode = bipartition[0]
    if measure == "log-negativity":
        return log_negativity(state, mode), {}
    if measure == "contangle":
        return contangle_pure(state, mode).value, {}
    if measure == "gaussian-contangle":
        report = gaussian_contangle(state)
        return report.value, {"method": report.method}
    report = residual_gaussian_contangle(state)
    return report.minimum_residual, report.to_json_dict()


def cmd_measure(args) -> int:
    state = _load_state(args.state)
    bipartition = _parse_bipartition(args.bipartition)
    value, detail = _dispatch_measure(state, args.measure, bipartition)
    print(f"{value:.12f}")
    if args.json:
        payload = {"measure": args.measure, "value": value}
        payload.update(detail)
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    config = CampaignConfig(
        system=args.system,
        n_parties=args.n_parties,
        trials=args.trials,
        seed=args.seed,
        tolerance=args.tolerance,
        r_max=args.r_max,
        n_max=args.n_max,
    )
    summary, rows = run_campaign(config)
    print(
        f"{config.system}: {summary.trials_run} trials, "
        f"{summary.violations} violations, "
        f"worst residual {_format_sig12(summary.worst_residual)}, "
        f"elapsed {summary.elapsed_seconds:.1f}s"
    )
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("trial,residual,argmin_focus,holds\n")
            for i, residual, focus, holds in rows:
                fh.write(f"{i},{_format_sig12(residual)},{focus},{holds}\n")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(summary.to_json_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return EXIT_OK


def cmd_sweep_ghzw(args) -> int:
    if not (0 <= args.r_min < args.r_max) or args.steps < 2:
        raise KeyError("need 0 <= r-min < r-max and steps >= 2")
    grid = np.linspace(args.r_min, args.r_max, args.steps)
    rows = promiscuity_sweep(grid, seed=args.seed)
    lines = ["r,pairwise_gtau,one_vs_rest_etau,min_residual,argmin_focus"]
    for row in rows:
        lines.append(
            ",".join(
                [
                    _format_sig12(row["r"]),
                    _format_sig12(row["pairwise_gtau"]),
                    _format_sig12(row["one_vs_rest_etau"]),
                    _format_sig12(row["min_residual"]),
                    str(row["argmin_focus"]),
                ]
            )
        )
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_gen(args) -> int:
    state = generate(args.name, r=args.r)
    text = state.to_json() + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monogamy-lab",
        description="Entanglement monotones and monogamy verification "
        "for qubit and Gaussian states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", help="evaluate one measure on a state file")
    p.add_argument("--state", required=True, help="JSON state file")
    p.add_argument("--measure", required=True, choices=QUBIT_MEASURES + CV_MEASURES)
    p.add_argument("--bipartition", default=None,
                   help="focus index or comma-separated subsystem indices (default 0)")
    p.add_argument("--json", default=None, help="also write a JSON report here")
    p.set_defaults(fn=cmd_measure)

    p = sub.add_parser("verify", help="run a seeded monogamy campaign")
    p.add_argument("system", choices=("qubits", "gaussian"))
    p.add_argument("--n-parties", type=int, default=3)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--r-max", type=float, default=1.5)
    p.add_argument("--n-max", type=float, default=1.0,
                   help="thermal ceiling; 1.0 samples pure Gaussian states")
    p.add_argument("--out", default=None, help="per-trial CSV path")
    p.add_argument("--json", default=None, help="summary JSON path")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("sweep-ghzw", help="promiscuity sweep of the symmetric CV family")
    p.add_argument("--r-min", type=float, default=0.0)
    p.add_argument("--r-max", type=float, default=1.5)
    p.add_argument("--steps", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="CSV path (stdout when omitted)")
    p.set_defaults(fn=cmd_sweep_ghzw)

    p = sub.add_parser("gen", help="write a canonical state as JSON")
    p.add_argument("name", choices=sorted(QUBIT_STATES) + sorted(CV_STATES))
    p.add_argument("--r", type=float, default=0.5,
                   help="squeezing parameter for CV states")
    p.add_argument("--out", default=None, help="output path (stdout when omitted)")
    p.set_defaults(fn=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (json.JSONDecodeError, KeyError, ValueError, StateValidationError,
            UnphysicalStateError, PurityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DimensionError, PartitionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (NumericalError, np.linalg.LinAlgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
