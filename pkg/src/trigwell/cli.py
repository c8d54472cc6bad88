"""Command-line front end.

Every subcommand emits one OutputEnvelope, as JSON (default) or CSV, to
stdout or to --out.  Envelope fields: schema_version, command, params,
generated_at (omitted under --deterministic), payload.  The payload is
always an array of flat records whose column order is frozen per
subcommand and documented in the README.  Exit codes: 0 success, 1 usage
or parameter error, 2 numerical non-convergence, 3 threshold breach in
--strict mode.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from datetime import datetime, timezone

import numpy as np

from .angular_spectrum import (
    PotentialForm,
    angular_potential,
    angular_problem,
    exact_b,
    exact_eigenfunction,
    fd_spectrum,
    spectrum_crosscheck,
)
from .composite_models import (
    ReductionKind,
    planar_energy,
    radial_oracle,
    reduction_report,
    threebody_energy,
)
from .model_core import (
    Couplings,
    FormMismatchError,
    ModelParams,
    NClass,
    ParameterError,
    SingularityError,
    domain_cell,
)
from .numerics import ConvergenceError
from .trig_identities import IdentityKind, SamplingError, identity_report

SCHEMA_VERSION = "1"

_KIND_NAMES = {
    "sin": IdentityKind.SIN_SUM,
    "cos": IdentityKind.COS_SUM,
    "pair": IdentityKind.COMBINED_PAIR,
    "four": IdentityKind.FOUR_TERM,
    "product": IdentityKind.SINE_PRODUCT,
}

_CHECK_NAMES = {k.value: k for k in ReductionKind}

_COLUMNS = {
    "identities": (
        "kind",
        "n_order",
        "samples",
        "min_singularity_distance",
        "max_relative_residual",
        "worst_point",
    ),
    "angular": ("m", "b_exact", "b_fd", "rel_err"),
    "wavefunction": ("phi", "psi"),
    "potential": ("phi", "v_direct_sum", "v_reduced", "rel_deviation"),
    "spectrum2d": ("n", "m", "b", "e_printed", "e_separated"),
    "spectrum3b": ("n", "m", "t", "b", "e_printed", "e_separated"),
    "reductions": ("label", "reference", "candidate", "rel_deviation"),
    "oracle": ("n", "energy"),
}


def _clean(value):
    """Map values to JSON/CSV-safe cells; non-finite floats become null."""
    if isinstance(value, (np.floating, float)):
        v = float(value)
        return v if math.isfinite(v) else None
    if isinstance(value, (np.integer, int)):
        return int(value)
    return value


def _model_params(args: argparse.Namespace) -> ModelParams:
    return ModelParams(args.N, Couplings(args.g1, args.g2), getattr(args, "omega", 1.0))


def _interior_grid(params: ModelParams, points: int) -> np.ndarray:
    cell = domain_cell(params)
    h = cell.length / (points + 1)
    return cell.phi_lo + h * np.arange(1, points + 1)


def _cmd_identities(args) -> tuple[dict, list[dict], float]:
    kind = _KIND_NAMES[args.kind]
    reports = identity_report(kind, args.n_max, args.samples, args.min_dist, args.seed)
    rows = [
        {
            "kind": r.kind.value,
            "n_order": r.n_order,
            "samples": r.samples,
            "min_singularity_distance": r.min_singularity_distance,
            "max_relative_residual": r.max_relative_residual,
            "worst_point": r.worst_point,
        }
        for r in reports
    ]
    params = {
        "kind": args.kind,
        "n_max": args.n_max,
        "samples": args.samples,
        "min_dist": args.min_dist,
        "seed": args.seed,
        "tol": args.tol,
    }
    breach = max(r.max_relative_residual for r in reports)
    return params, rows, breach / args.tol


def _cmd_angular(args) -> tuple[dict, list[dict], float]:
    params = _model_params(args)
    payload: list[dict] = []
    worst = 0.0
    if args.method == "exact":
        for m in range(args.m_max + 1):
            payload.append(
                {"m": m, "b_exact": exact_b(params, m), "b_fd": None, "rel_err": None}
            )
    elif args.method == "fd":
        count = (
            2 * args.m_max + 3
            if params.n_class is NClass.ZERO_MOD_4
            else args.m_max + 2
        )
        spec = fd_spectrum(angular_problem(params), args.grid, count, extrapolate=True)
        for i, val in enumerate(spec.values):
            payload.append(
                {"m": i, "b_exact": None, "b_fd": math.sqrt(val), "rel_err": None}
            )
    else:
        report = spectrum_crosscheck(params, args.m_max, args.grid)
        for i, row in enumerate(report.rows):
            b_fd = math.sqrt(row.reference)
            b_ex = math.sqrt(row.candidate)
            rel = abs(b_ex - b_fd) / b_fd
            worst = max(worst, rel)
            payload.append({"m": i, "b_exact": b_ex, "b_fd": b_fd, "rel_err": rel})
        for val in report.skipped_levels:
            payload.append(
                {"m": None, "b_exact": None, "b_fd": math.sqrt(val), "rel_err": None}
            )
    out_params = {
        "N": args.N,
        "g1": args.g1,
        "g2": args.g2,
        "m_max": args.m_max,
        "method": args.method,
        "grid": args.grid,
        "tol": args.tol,
    }
    return out_params, payload, worst / args.tol


def _cmd_wavefunction(args) -> tuple[dict, list[dict], float]:
    params = _model_params(args)
    problem = angular_problem(params)
    phi = _interior_grid(params, args.grid)
    psi = np.asarray(exact_eigenfunction(problem, args.m, phi))
    rows = [{"phi": float(p), "psi": float(v)} for p, v in zip(phi, psi)]
    out_params = {"N": args.N, "g1": args.g1, "g2": args.g2, "m": args.m, "grid": args.grid}
    return out_params, rows, 0.0


def _cmd_potential(args) -> tuple[dict, list[dict], float]:
    params = _model_params(args)
    phi = _interior_grid(params, args.grid)
    direct = np.asarray(angular_potential(params, phi, PotentialForm.DIRECT_SUM))
    reduced = np.asarray(angular_potential(params, phi, PotentialForm.REDUCED))
    dev = np.abs(direct - reduced) / np.maximum(np.abs(reduced), 1.0)
    rows = [
        {
            "phi": float(p),
            "v_direct_sum": float(d),
            "v_reduced": float(r),
            "rel_deviation": float(e),
        }
        for p, d, r, e in zip(phi, direct, reduced, dev)
    ]
    out_params = {
        "N": args.N,
        "g1": args.g1,
        "g2": args.g2,
        "grid": args.grid,
        "tol": args.tol,
    }
    return out_params, rows, float(np.max(dev)) / args.tol


def _cmd_spectrum2d(args) -> tuple[dict, list[dict], float]:
    params = _model_params(args)
    rows = []
    for n in range(args.n_max + 1):
        for m in range(args.m_max + 1):
            pair = planar_energy(params, n, m)
            rows.append(
                {
                    "n": n,
                    "m": m,
                    "b": exact_b(params, m),
                    "e_printed": pair.printed,
                    "e_separated": pair.separated,
                }
            )
    out_params = {
        "N": args.N,
        "g1": args.g1,
        "g2": args.g2,
        "omega": args.omega,
        "n_max": args.n_max,
        "m_max": args.m_max,
    }
    return out_params, rows, 0.0


def _cmd_spectrum3b(args) -> tuple[dict, list[dict], float]:
    params = _model_params(args)
    rows = []
    for n in range(args.n_max + 1):
        for m in range(args.m_max + 1):
            for t in range(args.t_max + 1):
                trip = threebody_energy(params, n, m, t)
                rows.append(
                    {
                        "n": n,
                        "m": m,
                        "t": t,
                        "b": exact_b(params, m),
                        "e_printed": trip.printed,
                        "e_separated": trip.separated,
                    }
                )
    out_params = {
        "N": args.N,
        "g1": args.g1,
        "g2": args.g2,
        "omega": args.omega,
        "n_max": args.n_max,
        "m_max": args.m_max,
        "t_max": args.t_max,
    }
    return out_params, rows, 0.0


def _cmd_reductions(args) -> tuple[dict, list[dict], float]:
    kind = _CHECK_NAMES[args.check]
    report = reduction_report(kind, args.samples, args.seed)
    rows = [
        {
            "label": r.label,
            "reference": r.reference,
            "candidate": r.candidate,
            "rel_deviation": r.rel_deviation,
        }
        for r in report.rows
    ]
    out_params = {
        "check": args.check,
        "samples": args.samples,
        "seed": args.seed,
        "tol": args.tol,
        "subject": report.subject,
        "max_rel_deviation": report.max_rel_deviation,
        "fitted_factor": report.fitted_factor,
        "winner": report.winner,
        "notes": "; ".join(report.notes),
    }
    return out_params, rows, report.max_rel_deviation / args.tol


def _cmd_oracle(args) -> tuple[dict, list[dict], float]:
    vals = radial_oracle(args.omega, args.b, args.count, args.grid, args.r_max)
    rows = [{"n": i, "energy": float(v)} for i, v in enumerate(vals)]
    out_params = {
        "omega": args.omega,
        "b": args.b,
        "count": args.count,
        "grid": args.grid,
        "r_max": args.r_max,
    }
    return out_params, rows, 0.0


_HANDLERS = {
    "identities": _cmd_identities,
    "angular": _cmd_angular,
    "wavefunction": _cmd_wavefunction,
    "potential": _cmd_potential,
    "spectrum2d": _cmd_spectrum2d,
    "spectrum3b": _cmd_spectrum3b,
    "reductions": _cmd_reductions,
    "oracle": _cmd_oracle,
}


def _format_cell(value) -> str:
    value = _clean(value)
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _render_csv(envelope: dict, command: str) -> str:
    buf = io.StringIO()
    buf.write(f"# schema_version: {envelope['schema_version']}\n")
    buf.write(f"# command: {envelope['command']}\n")
    buf.write(
        "# params: " + json.dumps(envelope["params"], sort_keys=True, default=_clean) + "\n"
    )
    if "generated_at" in envelope:
        buf.write(f"# generated_at: {envelope['generated_at']}\n")
    writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    columns = _COLUMNS[command]
    writer.writerow(columns)
    for record in envelope["payload"]:
        writer.writerow(_format_cell(record[c]) for c in columns)
    return buf.getvalue()


def _render_json(envelope: dict) -> str:
    def default(o):
        cleaned = _clean(o)
        if cleaned is o:
            raise TypeError(f"not JSON serializable: {o!r}")
        return cleaned

    cleaned_payload = [
        {k: _clean(v) for k, v in record.items()} for record in envelope["payload"]
    ]
    out = dict(envelope)
    out["payload"] = cleaned_payload
    out["params"] = {k: _clean(v) for k, v in envelope["params"].items()}
    return json.dumps(out, indent=2, default=default) + "\n"


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = out
    if not os.path.isabs(path):
        base = os.environ.get("TRIGWELL_OUT_DIR")
        if base:
            path = os.path.join(base, path)
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="output file (stdout if omitted)")
    p.add_argument(
        "--deterministic",
        action="store_true",
        help="omit timestamps so identical invocations are byte-identical",
    )
    p.add_argument(
        "--strict",
        action="store_true",
        help="exit 3 when the subcommand's deviation threshold is breached",
    )


def _add_model(p: argparse.ArgumentParser, omega: bool = False) -> None:
    p.add_argument("--N", type=int, required=True, help="lattice order")
    p.add_argument("--g1", type=float, required=True)
    p.add_argument("--g2", type=float, required=True)
    if omega:
        p.add_argument("--omega", type=float, default=1.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigwell",
        description="spectra and identity checks for solvable trigonometric wells",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("identities", help="random verification sweep of one identity kind")
    p.add_argument("--kind", choices=sorted(_KIND_NAMES), required=True)
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--min-dist", type=float, default=1e-3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9)
    _add_common(p)

    p = sub.add_parser("angular", help="angular ladder, exact and/or finite-difference")
    _add_model(p)
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--method", choices=("exact", "fd", "both"), default="both")
    p.add_argument("--grid", type=int, default=2000)
    p.add_argument("--tol", type=float, default=5e-3)
    _add_common(p)

    p = sub.add_parser("wavefunction", help="sample one closed-form eigenfunction")
    _add_model(p)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--grid", type=int, default=201, help="number of interior samples")
    _add_common(p)

    p = sub.add_parser("potential", help="angular potential, lattice sum vs reduced form")
    _add_model(p)
    p.add_argument("--grid", type=int, default=201, help="number of interior samples")
    p.add_argument("--tol", type=float, default=1e-10)
    _add_common(p)

    p = sub.add_parser("spectrum2d", help="planar energy candidates")
    _add_model(p, omega=True)
    p.add_argument("--n-max", type=int, default=2)
    p.add_argument("--m-max", type=int, default=3)
    _add_common(p)

    p = sub.add_parser("spectrum3b", help="three-body energy candidates")
    _add_model(p, omega=True)
    p.add_argument("--n-max", type=int, default=2)
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--t-max", type=int, default=2)
    _add_common(p)

    p = sub.add_parser("reductions", help="verify a special-case form against the general model")
    p.add_argument("--check", choices=sorted(_CHECK_NAMES), required=True)
    p.add_argument("--samples", type=int, default=400)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--tol", type=float, default=1e-10)
    _add_common(p)

    p = sub.add_parser("oracle", help="independent radial eigenvalues for given b")
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--count", type=int, default=3)
    p.add_argument("--grid", type=int, default=2000)
    p.add_argument("--r-max", type=float, default=None)
    _add_common(p)

    return parser


def run(args: argparse.Namespace) -> int:
    params, payload, breach_ratio = _HANDLERS[args.command](args)
    envelope: dict = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "params": params,
    }
    if not args.deterministic:
        envelope["generated_at"] = datetime.now(timezone.utc).isoformat(
            timespec="seconds"
        )
    envelope["payload"] = payload
    if args.format == "csv":
        text = _render_csv(envelope, args.command)
    else:
        text = _render_json(envelope)
    _write_output(text, args.out)
    if args.strict and breach_ratio > 1.0:
        print("strict mode: deviation threshold breached", file=sys.stderr)
        return 3
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
        return 0 if code == 0 else 1
    try:
        return run(args)
    except (ParameterError, FormMismatchError, SingularityError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ConvergenceError, SamplingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
