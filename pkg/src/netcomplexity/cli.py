"""Command line interface.

Subcommands: compute, bounds, generate, rewire, experiment, table1.
Exit codes: 0 success, 2 input error, 3 internal numerical failure.
Errors are reported as a single JSON line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

import numpy as np

from .complexity import DynamicsAssignment, bounds, min_inputs
from .fileio import InputError, edge_list_text, parse_edge_list, parse_groups
from .generators import GeneratorSpec, generate, rewire_uniform
from .harness import (
    ExperimentConfig,
    experiment_csv_text,
    run_compute,
    run_experiment,
    run_table1,
    to_json,
)

_MODEL_ALIASES = {
    "ba": "barabasi_albert",
    "ws": "watts_strogatz",
    "barabasi_albert": "barabasi_albert",
    "watts_strogatz": "watts_strogatz",
}


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be non-negative")
    return value


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _spec_from_args(args: argparse.Namespace, seed: int) -> GeneratorSpec:
    model = _MODEL_ALIASES[args.model]
    return GeneratorSpec(
        model=model,
        n=args.nodes,
        m=args.m,
        ring_degree=args.ring_degree,
        p=args.p,
        seed=seed,
    )


def _cmd_compute(args: argparse.Namespace) -> None:
    g = parse_edge_list(args.edges)
    if args.groups:
        d = parse_groups(args.groups, g, merge_tol=args.gamma_merge_tol)
    else:
        d = DynamicsAssignment.uniform(g.n)
    record = run_compute(g, d, numerical=args.numerical, tol=args.tol, seed=args.seed)
    _emit(to_json(record), args.out)


def _cmd_bounds(args: argparse.Namespace) -> None:
    g = parse_edge_list(args.edges)
    lo, hi = bounds(g)
    record = {"n": g.n, "lower_bound": lo, "upper_bound": hi, "n_min": min_inputs(g)}
    _emit(to_json(record), args.out)


def _cmd_generate(args: argparse.Namespace) -> None:
    g = generate(_spec_from_args(args, args.seed))
    _emit(edge_list_text(g), args.out)


def _cmd_rewire(args: argparse.Namespace) -> None:
    g = parse_edge_list(args.edges)
    _emit(edge_list_text(rewire_uniform(g, args.seed)), args.out)


def _cmd_experiment(args: argparse.Namespace) -> None:
    try:
        k_values = tuple(int(tok) for tok in args.k.split(",") if tok.strip())
    except ValueError:
        raise InputError(f"bad --k list {args.k!r}; expected comma-separated integers") from None
    generator = None if args.edges else _spec_from_args(args, 0)
    config = ExperimentConfig(
        k_values=k_values,
        trials=args.trials,
        master_seed=args.seed,
        generator=generator,
        input_path=args.edges,
        compute_numerical=args.numerical,
        tolerance=args.tol,
        output_path=args.out,
    )
    records, _ = run_experiment(config)
    if not args.out:
        sys.stdout.write(experiment_csv_text(records, args.numerical))


def _cmd_table1(args: argparse.Namespace) -> None:
    record = run_table1(args.edges, args.groups, rewire_trials=args.rewire_trials, seed=args.seed)
    _emit(to_json(record), args.out)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netcomplexity",
        description="Structural complexity of directed networks of first-order linear nodes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_nonneg_int, default=0, help="master RNG seed")
    common.add_argument("--tol", type=float, default=None,
                        help="numerical rank tolerance (default: SVD-based)")
    common.add_argument("--out", default=None, help="output file (default: stdout)")

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument("--model", choices=sorted(_MODEL_ALIASES), default="barabasi_albert",
                       help="random graph model (ba/ws are aliases)")
    model.add_argument("-n", "--nodes", type=int, default=100, help="node count")
    model.add_argument("--m", type=int, default=None, help="attachment edges per node (barabasi_albert)")
    model.add_argument("--ring-degree", type=int, default=4, help="ring lattice degree (watts_strogatz)")
    model.add_argument("--p", type=float, default=None, help="rewiring probability (watts_strogatz)")

    fmt = argparse.ArgumentDefaultsHelpFormatter

    p = sub.add_parser("compute", parents=[common], formatter_class=fmt,
                       help="complexity report for one network")
    p.add_argument("edges", help="edge-list file")
    p.add_argument("--groups", default=None,
                   help="groups file (default: all nodes in one group)")
    p.add_argument("--gamma-merge-tol", type=float, default=0.0,
                   help="group pole values within this absolute tolerance (value-mode groups)")
    p.add_argument("--numerical", action="store_true",
                   help="also analyse one weight realization and its realization oracles")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("bounds", parents=[common], formatter_class=fmt,
                       help="partition-free bounds and minimum input count")
    p.add_argument("edges", help="edge-list file")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("generate", parents=[common, model], formatter_class=fmt,
                       help="generate a random network as an edge list")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("rewire", parents=[common], formatter_class=fmt,
                       help="rewire a network uniformly, preserving the edge count")
    p.add_argument("edges", help="edge-list file")
    p.set_defaults(func=_cmd_rewire)

    p = sub.add_parser("experiment", parents=[common, model], formatter_class=fmt,
                       help="Monte Carlo sweep over group counts (CSV + summary)")
    p.add_argument("--edges", default=None,
                   help="edge-list file; per-trial uniform rewirings replace model sampling")
    p.add_argument("--k", required=True, help="comma-separated group counts, e.g. 1,25,50")
    p.add_argument("--trials", type=int, default=100, help="Monte Carlo runs per k")
    p.add_argument("--numerical", action="store_true",
                   help="also compute the index of one weight realization per trial")
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("table1", parents=[common], formatter_class=fmt,
                       help="normalized index of a real network vs. uniform rewirings")
    p.add_argument("--edges", required=True, help="edge-list file")
    p.add_argument("--groups", required=True, help="groups file")
    p.add_argument("--rewire-trials", type=int, default=100, help="number of rewired versions")
    p.set_defaults(func=_cmd_table1)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        args.func(args)
    except (np.linalg.LinAlgError, ArithmeticError) as exc:
        # Before ValueError: LinAlgError subclasses it.
        print(json.dumps({"error": f"numerical failure: {exc}"}), file=sys.stderr)
        return 3
    except (InputError, OSError, ValueError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
