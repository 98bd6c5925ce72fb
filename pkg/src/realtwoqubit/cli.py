"""Command line interface.

Subcommands: classify, prepare, connect, mesh, sample.  All numeric work
happens in the library; this layer only parses arguments, shuttles JSON/CSV,
and maps errors to exit codes (0 ok, 2 malformed input, 3 orbit mismatch
under --local-only).  States can also be piped on stdin, one
whitespace-separated state per line, for batch runs.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .geometry import (
    classify,
    entropy_from_distance,
    mesh_to_csv,
    mesh_to_dict,
    orbit_mesh,
    sample_orbit_states,
)
from .simulator import apply
from .states import DEFAULT_TOL, RealState, concurrence, sign_residual, to_bell
from .synthesis import OrbitMismatchError, cz_connect, local_connect, prepare


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="verification tolerance (default 1e-10)")
    common.add_argument("--format", choices=("json", "csv"), default="json", help="output format (csv applies to mesh)")
    common.add_argument("--seed", type=int, default=None, help="RNG seed for sampling")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="realtwoqubit",
        description="Orbit classification and circuit synthesis for real-amplitude two-qubit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="orbit class, distance, entropy and Bell coordinates")
    p.add_argument("state", nargs="*", type=float, metavar="W", help="four amplitudes (omit to read lines from stdin)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("prepare", parents=[common], help="preparation circuit from |00>")
    p.add_argument("state", nargs="*", type=float, metavar="W", help="four amplitudes (omit to read lines from stdin)")
    p.set_defaults(func=_cmd_prepare)

    p = sub.add_parser("connect", parents=[common], help="circuit taking the source state to the target state")
    p.add_argument("states", nargs="*", type=float, metavar="W", help="eight numbers: source then target (omit to read lines from stdin)")
    p.add_argument("--local-only", action="store_true", help="refuse to use CZ; exit 3 if the orbits differ")
    p.set_defaults(func=_cmd_connect)

    p = sub.add_parser("mesh", parents=[common], help="sample an orbit into the unit ball")
    p.add_argument("--d", type=float, required=True, help="orbit distance in [0, pi/4]")
    p.add_argument("--na", type=int, default=64, help="grid size for angle a (default 64)")
    p.add_argument("--nb", type=int, default=64, help="grid size for angle b (default 64)")
    p.add_argument("--out", default=None, help="write to this path instead of stdout")
    p.set_defaults(func=_cmd_mesh)

    p = sub.add_parser("sample", parents=[common], help="random states on an orbit")
    p.add_argument("--d", type=float, required=True, help="orbit distance in [0, pi/4]")
    p.add_argument("--count", type=int, default=1, help="number of states (default 1)")
    p.set_defaults(func=_cmd_sample)

    return parser


def _check_tol(args) -> float:
    if not (args.tol > 0.0):
        raise ValueError(f"tolerance must be positive, got {args.tol!r}")
    return args.tol


def _states_from_values(values: list[float], per_line: int):
    if len(values) != per_line:
        raise ValueError(f"expected {per_line} numbers, got {len(values)}")
    return [RealState.from_vector(values[i : i + 4]) for i in range(0, per_line, 4)]


def _input_batches(args_values: list[float], per_line: int):
    """Yield lists of states, one per input: argv values or stdin lines."""
    if args_values:
        yield _states_from_values(args_values, per_line)
        return
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        try:
            values = [float(tok) for tok in line.split()]
        except ValueError as exc:
            raise ValueError(f"malformed input line {line!r}") from exc
        yield _states_from_values(values, per_line)


def _classify_report(state: RealState) -> dict:
    orbit = classify(state)
    coords = to_bell(state)
    return {
        "d": orbit.d,
        "entropy": entropy_from_distance(orbit.d),
        "class": orbit.kind,
        "sheet": orbit.sheet,
        "bell": [coords.x1, coords.x2, coords.x3, coords.x4],
        "concurrence": concurrence(state),
    }


def _cmd_classify(args) -> int:
    _check_tol(args)
    for (state,) in _input_batches(args.state, 4):
        print(json.dumps(_classify_report(state)))
    return 0


def _cmd_prepare(args) -> int:
    _check_tol(args)
    zero = RealState(1.0, 0.0, 0.0, 0.0)
    for (state,) in _input_batches(args.state, 4):
        circuit = prepare(state)
        residual = sign_residual(apply(circuit, zero), state)
        print(json.dumps({**circuit.to_dict(), "residual": residual}))
    return 0


def _cmd_connect(args) -> int:
    tol = _check_tol(args)
    for src, tgt in _input_batches(args.states, 8):
        plan = local_connect(src, tgt, tol) if args.local_only else cz_connect(src, tgt, tol)
        print(json.dumps(plan.to_dict()))
    return 0


def _cmd_mesh(args) -> int:
    _check_tol(args)
    points = orbit_mesh(args.d, args.na, args.nb)
    if args.format == "csv":
        text = mesh_to_csv(points)
    else:
        text = json.dumps(mesh_to_dict(args.d, points)) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_sample(args) -> int:
    _check_tol(args)
    if args.count < 0:
        raise ValueError(f"count must be non-negative, got {args.count}")
    rng = np.random.default_rng(args.seed)
    states = sample_orbit_states(args.d, args.count, rng)
    print(json.dumps({"d": args.d, "states": [s.to_dict() for s in states]}))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OrbitMismatchError as exc:
        print(f"error: ORBIT_MISMATCH: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
