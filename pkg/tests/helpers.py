"""Shared test utilities: independent oracles and random instance samplers.

The brute-force matching oracle enumerates edge subsets outright; it shares
no code with the production matching and is the ground truth for every
matching-number assertion on small graphs.
"""

from itertools import combinations

import numpy as np

from netcomplexity import DirectedGraph, DynamicsAssignment, sample_pole_values


def brute_force_matching_number(edges) -> int:
    """Largest edge subset with pairwise distinct starts and distinct ends."""
    edges = list(edges)
    best = 0
    for r in range(len(edges), 0, -1):
        if r <= best:
            break
        for sub in combinations(edges, r):
            if len({e[0] for e in sub}) == r and len({e[1] for e in sub}) == r:
                best = r
                break
    return best


def random_graph(rng: np.random.Generator, max_n: int = 12, max_edges=None,
                 allow_self_loops: bool = False) -> DirectedGraph:
    """Random simple digraph with n in [1, max_n] and Bernoulli edges."""
    n = int(rng.integers(1, max_n + 1))
    density = float(rng.uniform(0.0, 0.6))
    mask = rng.random((n, n)) < density
    if not allow_self_loops:
        np.fill_diagonal(mask, False)
    edges = [(int(u), int(v)) for u, v in zip(*np.nonzero(mask))]
    if max_edges is not None and len(edges) > max_edges:
        keep = rng.choice(len(edges), size=max_edges, replace=False)
        edges = [edges[i] for i in sorted(keep)]
    return DirectedGraph(n, frozenset(edges))


def random_dynamics(rng: np.random.Generator, n: int) -> DynamicsAssignment:
    """Random pole assignment: k distinct well-separated values spread over nodes.

    The separation constraint caps k at 19, so only use this for small n.
    """
    k = int(rng.integers(1, n + 1))
    values = sample_pole_values(k, rng)
    block = rng.integers(0, k, size=n)
    block[rng.permutation(n)[:k]] = np.arange(k)  # every value used at least once
    return DynamicsAssignment.from_gamma(tuple(float(values[b]) for b in block))


def random_label_dynamics(rng: np.random.Generator, n: int) -> DynamicsAssignment:
    """Random group-label assignment with k in [1, n], every group non-empty."""
    k = int(rng.integers(1, n + 1))
    block = rng.integers(0, k, size=n)
    block[rng.permutation(n)[:k]] = np.arange(k)
    return DynamicsAssignment.from_labels(tuple(f"g{b}" for b in block))
