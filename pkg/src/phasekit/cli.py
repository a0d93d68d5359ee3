"""Command-line front end: ``phasekit {dist,sweep,state,compare}``.

Output is data only (CSV or JSON).  Exit status is 0 on success, 2 on a
usage error and 3 when the computation itself fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .errors import PhasekitError
from .phase import DEFAULT_GRID, WIGNER_MODES, pegg_barnett, quasi_distribution
from .states import KINDS, ORDERINGS, StateSpec, TruncationPolicy, build_state, number_moments
from .sweep import QUANTITIES, SweepSpec, alpha_range, run_sweep

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE = 0, 2, 3

DIST_COLUMNS = {"pb": None, "q": "husimi_q", "w": "wigner"}


def _csv_list(text: str) -> list[str]:
    return [t.strip() for t in str(text).split(",") if t.strip()]


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file whose keys mirror the flags")
    common.add_argument("--eta", type=float, help="Lamb-Dicke parameter")
    common.add_argument("--phi", type=float, default=0.0, help="phase of alpha, in [-pi, pi)")
    common.add_argument("--ordering", choices=ORDERINGS, default="f_a",
                        help="position of f(N) in A: f_a means A = f(N) a")
    common.add_argument("--n-max", type=int, default=TruncationPolicy.n_max,
                        help="truncation cap on the Fock series")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"),
                        help="csv (default) or json; state always writes json")

    sweep_flags = argparse.ArgumentParser(add_help=False)
    sweep_flags.add_argument("--alpha-min", type=float, default=0.0)
    sweep_flags.add_argument("--alpha-max", type=float, default=2.0)
    sweep_flags.add_argument("--steps", type=int, default=40)
    sweep_flags.add_argument("--quantities", default="var_phi",
                             help=f"comma-separated subset of {','.join(QUANTITIES)}")
    sweep_flags.add_argument("--workers", type=int, default=None)

    parser = argparse.ArgumentParser(prog="phasekit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", parents=[common], help="phase distributions on a theta grid")
    p.add_argument("--kind", choices=KINDS, default="displacement")
    p.add_argument("--alpha", type=float)
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    p.add_argument("--dists", default="pb", help="comma-separated subset of pb,q,w")
    p.add_argument("--wigner-mode", choices=WIGNER_MODES, default="gamma")

    p = sub.add_parser("sweep", parents=[common, sweep_flags], help="quantities versus |alpha|")
    p.add_argument("--kind", choices=KINDS, default="displacement")

    p = sub.add_parser("state", parents=[common], help="amplitudes and number moments as JSON")
    p.add_argument("--kind", choices=KINDS, default="displacement")
    p.add_argument("--alpha", type=float)

    p = sub.add_parser("compare", parents=[common, sweep_flags],
                       help="side-by-side sweeps of two kinds")
    p.add_argument("--kinds", default="displacement,eigenstate")
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.ArgumentParser:
    """Install --config values as subparser defaults so explicit flags win."""
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("command", nargs="?")
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config or known.command is None:
        return parser
    sub = parser._subparsers._group_actions[0].choices.get(known.command)
    if sub is None:
        return parser
    try:
        with open(known.config) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        sub.error(f"cannot read config {known.config!r}: {exc}")
    if not isinstance(data, dict):
        sub.error("config file must hold a JSON object")
    dests = {a.dest for a in sub._actions}
    defaults = {}
    for key, value in data.items():
        dest = key.lstrip("-").replace("-", "_")
        if dest not in dests or dest in ("help", "config"):
            sub.error(f"unknown config key {key!r}")
        if isinstance(value, list):
            value = ",".join(str(v) for v in value)
        defaults[dest] = value
    sub.set_defaults(**defaults)
    return parser


def _state_spec(args, kind: str, alpha: float) -> StateSpec:
    return StateSpec(kind, alpha, args.phi, args.eta,
                     TruncationPolicy(n_max=args.n_max), args.ordering)


def _fmt(x) -> str:
    return "" if x is None else repr(float(x))


def _fmt17(x) -> str:
    return format(float(x), ".17g")


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_dist(args, usage) -> int:
    dists = _csv_list(args.dists)
    bad = [d for d in dists if d not in DIST_COLUMNS]
    if bad or not dists:
        usage(f"--dists must be a subset of pb,q,w (got {args.dists!r})")
    if args.alpha is None:
        usage("--alpha is required")
    if args.grid < 4:
        usage("--grid must be at least 4")
    try:
        spec = _state_spec(args, args.kind, args.alpha)
    except ValueError as exc:
        usage(str(exc))
    state = build_state(spec)
    columns = {}
    thetas = None
    for name in DIST_COLUMNS:  # fixed column order theta,pb,q,w
        if name not in dists:
            continue
        if name == "pb":
            dist = pegg_barnett(state, args.grid)
        else:
            dist = quasi_distribution(state, args.grid, DIST_COLUMNS[name], args.wigner_mode)
        thetas = dist.thetas
        columns[name] = dist.values
    if args.format == "json":
        payload = {"kind": spec.kind, "eta": spec.eta, "alpha": spec.alpha_mag,
                   "phi": spec.alpha_phase, "theta": thetas.tolist(),
                   **{k: v.tolist() for k, v in columns.items()}}
        _emit(args, json.dumps(payload) + "\n")
    else:
        rows = [[_fmt17(t)] + [_fmt17(columns[c][i]) for c in columns]
                for i, t in enumerate(thetas)]
        _emit(args, _write_csv(["theta", *columns], rows))
    return EXIT_OK


def _sweep_inputs(args, usage):
    quantities = _csv_list(args.quantities)
    bad = [q for q in quantities if q not in QUANTITIES]
    if bad or not quantities:
        usage(f"--quantities must be a subset of {','.join(QUANTITIES)} (got {args.quantities!r})")
    try:
        alphas = alpha_range(args.alpha_min, args.alpha_max, args.steps)
    except ValueError as exc:
        usage(str(exc))
    if args.alpha_min < 0:
        usage("--alpha-min must be non-negative")
    return alphas, quantities


def _run(args, usage, kind, alphas, quantities):
    try:
        spec = SweepSpec(_state_spec(args, kind, 0.0), alphas, quantities)
    except ValueError as exc:
        usage(str(exc))
    return run_sweep(spec, workers=args.workers)


def cmd_sweep(args, usage) -> int:
    alphas, quantities = _sweep_inputs(args, usage)
    result = _run(args, usage, args.kind, alphas, quantities)
    if args.format == "json":
        _emit(args, result.to_json() + "\n")
    else:
        rows = [[_fmt(r.alpha)] + [_fmt(r.values[q]) for q in quantities] + [r.error or ""]
                for r in result.rows]
        _emit(args, _write_csv(["alpha", *quantities, "error"], rows))
    if all(r.error is not None for r in result.rows):
        print("error: every sweep row failed", file=sys.stderr)
        return EXIT_COMPUTE
    return EXIT_OK


def cmd_compare(args, usage) -> int:
    kinds = _csv_list(args.kinds)
    if len(kinds) != 2 or any(k not in KINDS for k in kinds):
        usage(f"--kinds must name two of {','.join(KINDS)} (got {args.kinds!r})")
    alphas, quantities = _sweep_inputs(args, usage)
    results = [_run(args, usage, kind, alphas, quantities) for kind in kinds]
    labels = kinds if kinds[0] != kinds[1] else [kinds[0], f"{kinds[1]}_2"]
    if args.format == "json":
        payload = {"kinds": kinds, "results": [r.to_dict() for r in results]}
        _emit(args, json.dumps(payload) + "\n")
    else:
        header = ["alpha"] + [f"{lab}_{q}" for lab in labels for q in quantities] + ["error"]
        rows = []
        for i, alpha in enumerate(alphas):
            row = [_fmt(alpha)]
            errors = []
            for lab, res in zip(labels, results):
                r = res.rows[i]
                row += [_fmt(r.values[q]) for q in quantities]
                if r.error:
                    errors.append(f"{lab}:{r.error}")
            rows.append(row + [";".join(errors)])
        _emit(args, _write_csv(header, rows))
    if all(r.error is not None for res in results for r in res.rows):
        print("error: every sweep row failed", file=sys.stderr)
        return EXIT_COMPUTE
    return EXIT_OK


def cmd_state(args, usage) -> int:
    if args.alpha is None:
        usage("--alpha is required")
    if args.format not in (None, "json"):
        usage("state output is JSON only")
    try:
        spec = _state_spec(args, args.kind, args.alpha)
    except ValueError as exc:
        usage(str(exc))
    state = build_state(spec)
    moments = number_moments(state)
    payload = {
        "kind": spec.kind,
        "eta": spec.eta,
        "alpha": spec.alpha_mag,
        "phi": spec.alpha_phase,
        "n_cut": state.n_cut,
        "amplitudes": state.a.tolist(),
        "mean_n": moments.mean_n,
        "var_n": moments.var_n,
        "norm_residual": state.norm_residual,
    }
    _emit(args, json.dumps(payload) + "\n")
    return EXIT_OK


COMMANDS = {"dist": cmd_dist, "sweep": cmd_sweep, "state": cmd_state, "compare": cmd_compare}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _apply_config(_build_parser(), argv)
    args = parser.parse_args(argv)
    sub = parser._subparsers._group_actions[0].choices[args.command]
    if args.phi is None or not -math.pi <= args.phi < math.pi:
        sub.error("--phi must lie in [-pi, pi)")
    if args.format is None:
        args.format = "json" if args.command == "state" else "csv"
    try:
        return COMMANDS[args.command](args, sub.error)
    except PhasekitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    raise SystemExit(main())
