"""Random network models and the null models used in the experiments.

Both classical models are undirected; the dynamics formalism is directed,
so every generated undirected edge is emitted as the bidirected pair
(u, v) and (v, u).  This preserves the models' topology; note that it makes
reproductions of published undirected-model experiments qualitative, since
an orientation convention is a modelling choice.

All generation is a pure function of the integer seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import DirectedGraph, NodePartition

_MODELS = ("barabasi_albert", "watts_strogatz")


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of one random graph model.

    ``m`` is the preferential-attachment edge count (Barabasi-Albert);
    ``ring_degree`` (even) and ``p`` are the lattice degree and rewiring
    probability (Watts-Strogatz).  ``ring_degree`` defaults to 4.
    """

    model: str
    n: int
    m: Optional[int] = None
    ring_degree: int = 4
    p: Optional[float] = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.model not in _MODELS:
            raise ValueError(f"unknown model {self.model!r}; expected one of {_MODELS}")
        if self.model == "barabasi_albert":
            if self.m is None or not 1 <= self.m < self.n:
                raise ValueError("barabasi_albert requires 1 <= m < n")
        else:
            if self.ring_degree % 2 != 0 or not 2 <= self.ring_degree < self.n:
                raise ValueError("watts_strogatz requires even ring_degree with 2 <= ring_degree < n")
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise ValueError("watts_strogatz requires rewiring probability p in [0, 1]")


def generate(spec: GeneratorSpec) -> DirectedGraph:
    """Generate the bidirected graph described by ``spec``."""
    if spec.model == "barabasi_albert":
        return barabasi_albert(spec.n, spec.m, spec.seed)
    return watts_strogatz(spec.n, spec.ring_degree, spec.p, spec.seed)


def _bidirect(n: int, undirected: set[tuple[int, int]]) -> DirectedGraph:
    edges = set()
    for a, b in undirected:
        edges.add((a, b))
        edges.add((b, a))
    return DirectedGraph(n, frozenset(edges))


def barabasi_albert(n: int, m: int, seed: int = 0) -> DirectedGraph:
    """Preferential-attachment graph, emitted bidirected.

    Starts from a complete seed graph on ``m`` nodes; every later node
    attaches ``m`` edges to distinct existing nodes sampled proportionally
    to degree.  While all degrees are zero (only possible for m=1, where the
    seed graph is a single isolated node) targets are sampled uniformly.
    """
    if not 1 <= m < n:
        raise ValueError("requires 1 <= m < n")
    rng = np.random.default_rng(seed)
    und: set[tuple[int, int]] = set()
    for i in range(m):
        for j in range(i + 1, m):
            und.add((i, j))
    # One entry per unit of degree; sampling an index from this list is
    # degree-proportional sampling of a node.
    repeated: list[int] = []
    for i in range(m):
        repeated.extend([i] * (m - 1))
    for v in range(m, n):
        targets: set[int] = set()
        while len(targets) < m:
            if repeated:
                cand = repeated[int(rng.integers(len(repeated)))]
            else:
                cand = int(rng.integers(v))
            targets.add(cand)
        for t in sorted(targets):
            und.add((t, v))
            repeated.append(v)
            repeated.append(t)
    return _bidirect(n, und)


def watts_strogatz(n: int, ring_degree: int, p: float, seed: int = 0) -> DirectedGraph:
    """Ring lattice with random rewiring, emitted bidirected.

    Each node starts connected to its ``ring_degree`` nearest neighbours;
    every lattice edge is then rewired independently with probability ``p``
    to a uniformly chosen endpoint, skipping self-loops and duplicates.  The
    undirected edge count is exactly ``n * ring_degree / 2`` for every ``p``.
    """
    if ring_degree % 2 != 0 or not 2 <= ring_degree < n:
        raise ValueError("requires even ring_degree with 2 <= ring_degree < n")
    if not 0.0 <= p <= 1.0:
        raise ValueError("rewiring probability must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    half = ring_degree // 2
    und: set[tuple[int, int]] = set()
    neigh: list[set[int]] = [set() for _ in range(n)]

    def add(a: int, b: int) -> None:
        und.add((min(a, b), max(a, b)))
        neigh[a].add(b)
        neigh[b].add(a)

    def remove(a: int, b: int) -> None:
        und.discard((min(a, b), max(a, b)))
        neigh[a].discard(b)
        neigh[b].discard(a)

    for d in range(1, half + 1):
        for u in range(n):
            add(u, (u + d) % n)
    for d in range(1, half + 1):
        for u in range(n):
            if rng.random() >= p:
                continue
            v = (u + d) % n
            if len(neigh[u]) >= n - 1:
                continue  # no valid rewiring target; keep the lattice edge
            w = int(rng.integers(n))
            while w == u or w in neigh[u]:
                w = int(rng.integers(n))
            remove(u, v)
            add(u, w)
    return _bidirect(n, und)


def rewire_uniform(g: DirectedGraph, seed: int = 0) -> DirectedGraph:
    """Null model: same node and edge count, edges placed uniformly at random.

    The whole edge set is resampled as a uniform draw of ``|E|`` distinct
    ordered pairs (u, v), u != v.  Weights are not carried over; the result
    is a pure structure.
    """
    n, m = g.n, g.num_edges
    capacity = n * (n - 1)
    if m > capacity:
        raise ValueError(f"cannot place {m} simple directed edges on {n} nodes")
    if m == 0:
        return DirectedGraph(n, frozenset(), None, g.node_ids)
    rng = np.random.default_rng(seed)
    idx = rng.choice(capacity, size=m, replace=False)
    u = idx // (n - 1)
    r = idx % (n - 1)
    v = r + (r >= u)
    return DirectedGraph(n, frozenset(zip(u.tolist(), v.tolist())), None, g.node_ids)


def random_partition(n: int, k: int, seed: int = 0) -> NodePartition:
    """Assign nodes to ``k`` groups at random, every group non-empty.

    One random node per group is designated first (via a random
    permutation), the remaining nodes are assigned uniformly.  This
    guarantees occupancy in one pass; rejection of empty-group draws has
    vanishing acceptance probability once k approaches n.
    """
    if not 1 <= k <= n:
        raise ValueError(f"requires 1 <= k <= n, got k={k}, n={n}")
    rng = np.random.default_rng(seed)
    block = np.empty(n, dtype=np.int64)
    perm = rng.permutation(n)
    block[perm[:k]] = np.arange(k)
    if n > k:
        block[perm[k:]] = rng.integers(0, k, size=n - k)
    return NodePartition(k=k, block_of=tuple(int(b) for b in block))
