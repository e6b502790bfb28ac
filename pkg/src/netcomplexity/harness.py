"""Single-graph reports, Monte Carlo sweeps, and the randomization comparison.

All pipelines are deterministic given their master seed: per-trial RNG
streams are derived from (master seed, role, trial, ...) spawn keys, so
re-running a command with identical inputs produces byte-identical result
payloads.  Wall-clock timings are kept on the in-memory records only and
never serialized.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .complexity import (
    Dynamics,
    DynamicsAssignment,
    mcmillan_oracle,
    numerical_complexity,
    sample_weights,
    structural_complexity,
)
from .fileio import parse_edge_list, parse_groups
from .generators import GeneratorSpec, generate, random_partition, rewire_uniform
from .graph import DirectedGraph, NodePartition

CSV_HEADER = ("trial", "k", "phi_structural", "lower", "upper", "phi_over_n", "seed")


def derive_seed(master: int, *key: int) -> int:
    """Deterministic 64-bit child seed for stream (master, *key)."""
    ss = np.random.SeedSequence(master, spawn_key=tuple(key))
    return int(ss.generate_state(1, np.uint64)[0])


def _ensure_poles(d: Dynamics, rng: np.random.Generator) -> DynamicsAssignment:
    if isinstance(d, NodePartition):
        d = DynamicsAssignment.from_labels(tuple(f"g{b}" for b in d.block_of))
    return d.with_sampled_poles(rng)


def run_compute(
    g: DirectedGraph,
    d: Dynamics,
    numerical: bool = False,
    tol: Optional[float] = None,
    seed: int = 0,
) -> dict:
    """Full complexity report for one graph, as a JSON-ready mapping.

    The structural index, per-block matching numbers, bounds, minimum input
    count and the normalized index are always present.  With ``numerical``
    set, one weight realization is analysed as well: weights are sampled
    standard normal when the graph carries none, representative poles are
    sampled when the dynamics carry none, and the realization's index plus
    the two state-space oracle degrees are reported with the seed and
    tolerance used.
    """
    rep = structural_complexity(g, d)
    record = {
        "n": rep.n,
        "k": rep.k,
        "phi_structural": rep.phi_structural,
        "per_block": list(rep.per_block),
        "lower_bound": rep.lower_bound,
        "upper_bound": rep.upper_bound,
        "n_min": rep.n_min,
        "phi_over_n": round(rep.phi_over_n, 4),
    }
    if numerical:
        gw = g if g.has_weights else sample_weights(g, np.random.default_rng(derive_seed(seed, 0)))
        dd = _ensure_poles(d, np.random.default_rng(derive_seed(seed, 1)))
        record["phi_numerical"] = numerical_complexity(gw, dd, tol)
        record["oracle_values"] = list(mcmillan_oracle(gw, dd, tol))
        record["seed"] = seed
        record["tolerance"] = tol
    return record


@dataclass(frozen=True)
class ResultRecord:
    """One Monte Carlo trial of the sweep."""

    trial: int
    k: int
    generator: str
    phi_structural: int
    per_block: tuple[int, ...]
    lower: int
    upper: int
    phi_over_n: float
    seed: int
    phi_numerical: Optional[int] = None
    wall_time_s: Optional[float] = None  # metadata only, never serialized


@dataclass(frozen=True)
class ExperimentConfig:
    """A Monte Carlo sweep over group counts.

    The graph source is either a random-model spec (a fresh graph per
    trial) or an input edge-list path (a uniform rewiring per trial).
    """

    k_values: tuple[int, ...]
    trials: int
    master_seed: int
    generator: Optional[GeneratorSpec] = None
    input_path: Optional[str] = None
    compute_numerical: bool = False
    tolerance: Optional[float] = None
    output_path: Optional[str] = None

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not self.k_values or any(k < 1 for k in self.k_values):
            raise ValueError("k_values must be non-empty positive integers")
        if (self.generator is None) == (self.input_path is None):
            raise ValueError("exactly one of generator and input_path must be given")
        if self.master_seed < 0:
            raise ValueError("master_seed must be non-negative")


def run_experiment(config: ExperimentConfig) -> tuple[list[ResultRecord], list[dict]]:
    """Run the sweep; returns (per-trial records, per-k summary rows).

    For each k and trial: draw the graph (same graph seed across the
    k values of a trial, so k comparisons are paired), draw a random
    k-group assignment, and compute the structural index.  Rows are ordered
    by k as given, then by trial.  Writes the CSV payload and a box-plot
    summary next to it when the config carries an output path.
    """
    if config.input_path is not None:
        base = parse_edge_list(config.input_path)
        n = base.n
        label = f"rewire({os.path.basename(config.input_path)})"
    else:
        base = None
        spec = config.generator
        n = spec.n
        if spec.model == "barabasi_albert":
            label = f"barabasi_albert(n={spec.n},m={spec.m})"
        else:
            label = f"watts_strogatz(n={spec.n},ring_degree={spec.ring_degree},p={spec.p})"
    bad = [k for k in config.k_values if k > n]
    if bad:
        raise ValueError(f"group count {bad[0]} exceeds node count {n}")

    records: list[ResultRecord] = []
    for k in config.k_values:
        for t in range(config.trials):
            t0 = time.perf_counter()
            gseed = derive_seed(config.master_seed, 0, t)
            if base is not None:
                g = rewire_uniform(base, gseed)
            else:
                g = generate(replace(config.generator, seed=gseed))
            part = random_partition(n, k, derive_seed(config.master_seed, 1, t, k))
            rep = structural_complexity(g, part)
            phi_num = None
            if config.compute_numerical:
                wrng = np.random.default_rng(derive_seed(config.master_seed, 2, t, k))
                phi_num = numerical_complexity(sample_weights(g, wrng), part, config.tolerance)
            records.append(
                ResultRecord(
                    trial=t,
                    k=k,
                    generator=label,
                    phi_structural=rep.phi_structural,
                    per_block=rep.per_block,
                    lower=rep.lower_bound,
                    upper=rep.upper_bound,
                    phi_over_n=rep.phi_over_n,
                    seed=gseed,
                    phi_numerical=phi_num,
                    wall_time_s=time.perf_counter() - t0,
                )
            )
    summaries = summarize(records, config.k_values)
    if config.output_path:
        write_experiment_csv(records, config.output_path, config.compute_numerical)
        write_summary_csv(summaries, summary_path(config.output_path))
    return records, summaries


def summarize(records: list[ResultRecord], k_values: tuple[int, ...]) -> list[dict]:
    """Per-k five-number summary of the structural index (box-plot ready)."""
    out = []
    for k in k_values:
        phis = np.array([r.phi_structural for r in records if r.k == k], dtype=float)
        out.append(
            {
                "k": k,
                "median": float(np.median(phis)),
                "q1": float(np.percentile(phis, 25)),
                "q3": float(np.percentile(phis, 75)),
                "min": float(phis.min()),
                "max": float(phis.max()),
                "trials": int(phis.size),
            }
        )
    return out


def summary_path(output_path: str) -> str:
    stem, ext = os.path.splitext(output_path)
    return f"{stem}_summary{ext or '.csv'}"


def experiment_csv_text(records: list[ResultRecord], include_numerical: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER + (("phi_numerical",) if include_numerical else ()))
    for r in records:
        row = [r.trial, r.k, r.phi_structural, r.lower, r.upper, f"{r.phi_over_n:.4f}", r.seed]
        if include_numerical:
            row.append(r.phi_numerical)
        writer.writerow(row)
    return buf.getvalue()


def summary_csv_text(summaries: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "median", "q1", "q3", "min", "max", "trials"])
    for s in summaries:
        writer.writerow([s["k"], s["median"], s["q1"], s["q3"], s["min"], s["max"], s["trials"]])
    return buf.getvalue()


def write_experiment_csv(records: list[ResultRecord], path: str, include_numerical: bool = False) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(experiment_csv_text(records, include_numerical))


def write_summary_csv(summaries: list[dict], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(summary_csv_text(summaries))


def run_table1(
    edges_path: str,
    groups_path: str,
    rewire_trials: int = 100,
    seed: int = 0,
) -> dict:
    """Normalized index of a real network versus its uniform rewirings.

    Loads the network and its group assignment, computes the normalized
    structural index, then the mean of the index over ``rewire_trials``
    uniformly rewired versions (same node count, same edge count, same
    group assignment).
    """
    if rewire_trials < 1:
        raise ValueError("rewire_trials must be at least 1")
    g = parse_edge_list(edges_path)
    d = parse_groups(groups_path, g)
    rep = structural_complexity(g, d)
    part = d.partition()
    rand_phis = []
    for t in range(rewire_trials):
        rg = rewire_uniform(g, derive_seed(seed, t))
        rand_phis.append(structural_complexity(rg, part).phi_structural)
    rand_mean = float(np.mean(rand_phis))
    over_n = 1.0 / g.n if g.n else 0.0
    return {
        "n": g.n,
        "edges": g.num_edges,
        "k": rep.k,
        "phi_true": rep.phi_structural,
        "phi_over_n_true": round(rep.phi_structural * over_n, 4),
        "rewire_trials": rewire_trials,
        "phi_rand_mean": round(rand_mean, 4),
        "phi_over_n_rand_mean": round(rand_mean * over_n, 4),
        "seed": seed,
    }


def to_json(record: dict) -> str:
    """Canonical JSON rendering used by every single-record command."""
    return json.dumps(record, indent=2) + "\n"
