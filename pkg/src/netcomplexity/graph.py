"""Directed graph primitives: degrees, sinks, edge-cuts, matching, structural rank.

The central quantity here is the matching number of a directed graph: the
size of a largest set of edges in which no two edges share a start node and
no two share an end node.  It is computed by splitting every node into an
out-copy and an in-copy and running Hopcroft-Karp maximum bipartite matching
on the resulting bipartite graph.  The same routine computes the structural
rank of a sparsity pattern (rows vs. columns, one bipartite edge per
nonzero position).

Everything in this module is pure Python over immutable inputs and safe to
call concurrently.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence

Edge = tuple[int, int]

_UNMATCHED = -1
_INF = -1  # BFS layer sentinel


@dataclass(frozen=True)
class DirectedGraph:
    """Immutable directed graph on nodes ``0..n-1`` with optional edge weights.

    ``weights`` maps an edge ``(src, dst)`` to the coupling strength that
    multiplies the state of ``src`` in the dynamics of ``dst``.  A graph
    without weights is a pure sparsity structure whose edge weights are free
    parameters.  ``node_ids`` optionally retains the external string labels
    assigned at ingestion (index ``i`` holds the label of node ``i``).

    Self-loops are allowed by the data model; the matching reduction handles
    them naturally because the out-copy and in-copy of a node are distinct.
    """

    n: int
    edges: frozenset[Edge]
    weights: Optional[Mapping[Edge, float]] = None
    node_ids: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("node count must be non-negative")
        object.__setattr__(self, "edges", frozenset(self.edges))
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
        if self.weights is not None:
            w = dict(self.weights)
            if set(w) != self.edges:
                raise ValueError("weights must cover exactly the edge set")
            for e, val in w.items():
                val = float(val)
                if not math.isfinite(val) or val == 0.0:
                    raise ValueError(f"edge {e} must have a finite nonzero weight")
                w[e] = val
            object.__setattr__(self, "weights", w)
        if self.node_ids is not None:
            ids = tuple(self.node_ids)
            if len(ids) != self.n or len(set(ids)) != self.n:
                raise ValueError("node_ids must be n distinct labels")
            object.__setattr__(self, "node_ids", ids)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def has_weights(self) -> bool:
        return self.weights is not None

    def sorted_edges(self) -> list[Edge]:
        """Edges in ascending (src, dst) order; the canonical iteration order."""
        return sorted(self.edges)

    def with_weights(self, weights: Mapping[Edge, float]) -> "DirectedGraph":
        return DirectedGraph(self.n, self.edges, weights, self.node_ids)

    def label_of(self, node: int) -> str:
        return self.node_ids[node] if self.node_ids is not None else str(node)


@dataclass(frozen=True)
class NodePartition:
    """Partition of ``0..n-1`` into ``k`` non-empty blocks ``0..k-1``."""

    k: int
    block_of: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "block_of", tuple(int(b) for b in self.block_of))
        if self.k < 0 or (self.k == 0 and self.block_of):
            raise ValueError("invalid block count")
        seen = set()
        for b in self.block_of:
            if not 0 <= b < self.k:
                raise ValueError(f"block index {b} out of range for k={self.k}")
            seen.add(b)
        if len(seen) != self.k:
            raise ValueError("every block must be non-empty")

    @property
    def n(self) -> int:
        return len(self.block_of)

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for node, b in enumerate(self.block_of):
            out[b].append(node)
        return out

    @classmethod
    def from_labels(cls, labels: Sequence) -> "NodePartition":
        """Build a partition from arbitrary per-node labels.

        Block indices follow the first appearance of each distinct label.
        """
        index: dict = {}
        block_of = []
        for lab in labels:
            if lab not in index:
                index[lab] = len(index)
            block_of.append(index[lab])
        return cls(k=len(index), block_of=tuple(block_of))


@dataclass(frozen=True)
class SparsityPattern:
    """Zero/free pattern of a matrix: the set of positions allowed to be nonzero."""

    rows: int
    cols: int
    nonzeros: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("dimensions must be non-negative")
        object.__setattr__(self, "nonzeros", frozenset(self.nonzeros))
        for r, c in self.nonzeros:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"position ({r}, {c}) out of bounds")

    def transpose(self) -> "SparsityPattern":
        return SparsityPattern(self.cols, self.rows, frozenset((c, r) for r, c in self.nonzeros))

    @classmethod
    def from_matrix(cls, matrix) -> "SparsityPattern":
        """Pattern of the exactly-nonzero entries of a dense matrix."""
        nz = set()
        for r, row in enumerate(matrix):
            for c, val in enumerate(row):
                if val != 0:
                    nz.add((r, c))
        return cls(len(matrix), len(matrix[0]) if len(matrix) else 0, frozenset(nz))


def degrees(g: DirectedGraph) -> tuple[list[int], list[int]]:
    """Per-node (in_degree, out_degree); a self-loop contributes 1 to each."""
    indeg = [0] * g.n
    outdeg = [0] * g.n
    for u, v in g.edges:
        outdeg[u] += 1
        indeg[v] += 1
    return indeg, outdeg


def sinks(g: DirectedGraph) -> set[int]:
    """Nodes with out-degree zero.  Isolated nodes are sinks (and sources)."""
    _, outdeg = degrees(g)
    return {v for v in range(g.n) if outdeg[v] == 0}


def sources(g: DirectedGraph) -> set[int]:
    """Nodes with in-degree zero."""
    indeg, _ = degrees(g)
    return {v for v in range(g.n) if indeg[v] == 0}


def edge_cut(g: DirectedGraph, p: NodePartition, direction: str = "outgoing") -> list[DirectedGraph]:
    """Split the edge set of ``g`` along a node partition.

    For the outgoing cut, subgraph ``i`` keeps the edges whose start node
    lies in block ``i``; for the ingoing cut, the edges whose end node lies
    in block ``i``.  All subgraphs share the node set of ``g``, their edge
    sets partition the edges of ``g``, and weights are carried over.

    Raises ValueError if the partition does not cover the nodes of ``g`` or
    the direction is unknown.
    """
    if direction not in ("outgoing", "ingoing"):
        raise ValueError(f"direction must be 'outgoing' or 'ingoing', got {direction!r}")
    if p.n != g.n:
        raise ValueError(f"partition covers {p.n} nodes but graph has {g.n}")
    pick = 0 if direction == "outgoing" else 1
    buckets: list[set[Edge]] = [set() for _ in range(p.k)]
    for e in g.edges:
        buckets[p.block_of[e[pick]]].add(e)
    out = []
    for es in buckets:
        w = {e: g.weights[e] for e in es} if g.has_weights else None
        out.append(DirectedGraph(g.n, frozenset(es), w, g.node_ids))
    return out


def _hopcroft_karp(adj: Sequence[Sequence[int]], n_right: int) -> dict[int, int]:
    """Maximum bipartite matching via Hopcroft-Karp layered augmentation.

    ``adj[u]`` lists the right-side neighbours of left node ``u`` and must be
    sorted ascending; left nodes are processed in ascending order so the
    returned matching (left -> right), not just its size, is deterministic.
    Runs in O(E * sqrt(V)).  The augmenting DFS is iterative, so long paths
    in large graphs do not hit the recursion limit.
    """
    n_left = len(adj)
    pair_left = [_UNMATCHED] * n_left
    pair_right = [_UNMATCHED] * n_right
    dist = [0] * n_left

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in range(n_left):
            if pair_left[u] == _UNMATCHED:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found_free = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = pair_right[v]
                if w == _UNMATCHED:
                    found_free = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found_free

    def dfs(root: int) -> bool:
        # Frames are [left node, neighbour iterator, edge taken from this frame].
        frames: list[list] = [[root, iter(adj[root]), _UNMATCHED]]
        while frames:
            frame = frames[-1]
            u: int = frame[0]
            it: Iterator[int] = frame[1]
            descended = False
            for v in it:
                w = pair_right[v]
                if w == _UNMATCHED:
                    frame[2] = v
                    for fu, _, fv in frames:
                        pair_left[fu] = fv
                        pair_right[fv] = fu
                    return True
                if dist[w] == dist[u] + 1:
                    frame[2] = v
                    frames.append([w, iter(adj[w]), _UNMATCHED])
                    descended = True
                    break
            if not descended:
                dist[u] = _INF
                frames.pop()
        return False

    while bfs():
        for u in range(n_left):
            if pair_left[u] == _UNMATCHED:
                dfs(u)
    return {u: v for u, v in enumerate(pair_left) if v != _UNMATCHED}


def maximum_matching(g: DirectedGraph) -> dict[int, int]:
    """A maximum matching of ``g`` as a start->end map over directed edges.

    No two entries share a key (start node) by construction and no two share
    a value (end node).  Ties are broken by ascending node index, so the
    result is reproducible.
    """
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.sorted_edges():
        adj[u].append(v)
    return _hopcroft_karp(adj, g.n)


def matching_number(g: DirectedGraph) -> int:
    """Size of a maximum matching of the directed graph."""
    return len(maximum_matching(g))


def structural_rank(p: SparsityPattern) -> int:
    """Maximum rank over all numerical realizations of the pattern.

    Equals the maximum bipartite matching between rows and columns with one
    edge per nonzero position.
    """
    adj: list[list[int]] = [[] for _ in range(p.rows)]
    for r, c in sorted(p.nonzeros):
        adj[r].append(c)
    return len(_hopcroft_karp(adj, p.cols))


def adjacency_pattern(g: DirectedGraph) -> SparsityPattern:
    """Sparsity pattern of the coupling matrix of ``g``.

    Row ``i``, column ``j`` is nonzero exactly when the edge ``(j, i)`` is
    present, i.e. rows index targets and columns index sources.
    """
    return SparsityPattern(g.n, g.n, frozenset((v, u) for u, v in g.edges))


def graph_from_adjacency(p: SparsityPattern) -> DirectedGraph:
    """Directed graph whose adjacency matrix has pattern ``p``.

    Here the adjacency convention is row=start, column=end: nonzero
    position ``(u, v)`` becomes the edge ``(u, v)``.  Requires ``p`` square.
    """
    if p.rows != p.cols:
        raise ValueError("adjacency pattern must be square")
    return DirectedGraph(p.rows, frozenset(p.nonzeros))
