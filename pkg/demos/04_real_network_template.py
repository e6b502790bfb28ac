"""Comparing a network against its uniformly rewired null model.

This is the pipeline behind the `netcomplexity table1` subcommand: load a
directed network and a per-node grouping, compute the normalized structural
index, then average the index over uniform rewirings that keep node and
edge counts fixed.  A gap between the two values means the real wiring
carries structure that random wiring would not produce.

Real datasets are not bundled (see the README for the expected sources and
file layout under data/table1/).  This script builds a synthetic stand-in:
a modular network whose two groups mostly avoid cross-links.

    python demos/04_real_network_template.py
"""

import os
import tempfile

import numpy as np

from netcomplexity import DirectedGraph, run_table1, write_edge_list

rng = np.random.default_rng(11)
n = 60
half = n // 2

# Two dense communities with sparse cross wiring, plus some sink nodes:
# rewiring destroys both the community structure and the sinks.
edges = set()
for _ in range(500):
    if rng.random() < 0.9:
        block = 0 if rng.random() < 0.5 else half
        u, v = block + rng.integers(half, size=2)
    else:
        u, v = rng.integers(half), half + rng.integers(half)
    if u != v and u % 7 != 0:  # nodes 0, 7, 14, ... never send: forced sinks
        edges.add((int(u), int(v)))

g = DirectedGraph(n, edges)

with tempfile.TemporaryDirectory() as tmp:
    edges_path = os.path.join(tmp, "edges.csv")
    groups_path = os.path.join(tmp, "groups.csv")
    write_edge_list(edges_path, g)
    with open(groups_path, "w", encoding="utf-8") as fh:
        for i in range(n):
            fh.write(f"{i},{'core' if i < half else 'periphery'}\n")

    record = run_table1(edges_path, groups_path, rewire_trials=100, seed=5)

print(f"nodes: {record['n']}, edges: {record['edges']}, groups: {record['k']}")
print(f"normalized index, true network   : {record['phi_over_n_true']:.4f}")
print(f"normalized index, rewired (mean) : {record['phi_over_n_rand_mean']:.4f}")
print(f"({record['rewire_trials']} rewirings, seed {record['seed']})")
print()
print("With real data in place, the same comparison runs as:")
print("  netcomplexity table1 --edges data/table1/ce_edges.csv \\")
print("      --groups data/table1/ce_groups.csv --rewire-trials 100")
