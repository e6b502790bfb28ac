"""Edge-list and group-file parsing plus edge-list writing.

Edge list format, one edge per line::

    # comment
    n=5            (optional; declares the node count, IDs must then be 0..n-1)
    a,b            (edge a -> b)
    b,c,1.5        (edge b -> c with weight 1.5)

Fields are comma- or tab-separated.  Node IDs are arbitrary strings mapped
to dense 0-based indices in first-appearance order (identity mapping when
the ``n=`` header is present).  Weights are all-or-nothing: either every
edge carries one or none does.  Duplicate edges are an error.

Groups file, one line per node: ``node_id,group_label`` or
``node_id,gamma_value``.  The mode is decided per file: if every second
field parses as a real number the file assigns pole values, otherwise
labels; a mix is an error.  Every graph node must appear exactly once.
"""

from __future__ import annotations

import math
import re
from typing import Optional

from .complexity import DynamicsAssignment
from .graph import DirectedGraph

_HEADER_RE = re.compile(r"^n\s*=\s*(\d+)$")


class InputError(ValueError):
    """Malformed or inconsistent input file."""


def _split(line: str) -> list[str]:
    sep = "\t" if "\t" in line else ","
    return [tok.strip() for tok in line.split(sep)]


def parse_edge_list(path: str, require_header: bool = False) -> DirectedGraph:
    """Parse an edge-list file into a DirectedGraph with its ID mapping retained."""
    n_header: Optional[int] = None
    index: dict[str, int] = {}
    order: list[str] = []
    edges: list[tuple[int, int]] = []
    seen: set[tuple[str, str]] = set()
    weights: dict[tuple[int, int], float] = {}
    unweighted = 0

    def node(tok: str, lineno: int) -> int:
        if n_header is not None:
            try:
                i = int(tok)
            except ValueError:
                raise InputError(f"line {lineno}: node ID {tok!r} must be an integer when n= is declared") from None
            if not 0 <= i < n_header:
                raise InputError(f"line {lineno}: node ID {i} outside declared range n={n_header}")
            return i
        if tok not in index:
            index[tok] = len(order)
            order.append(tok)
        return index[tok]

    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            m = _HEADER_RE.match(line)
            if m:
                if n_header is not None:
                    raise InputError(f"line {lineno}: duplicate n= header")
                if edges:
                    raise InputError(f"line {lineno}: n= header must precede the edges")
                n_header = int(m.group(1))
                continue
            parts = _split(line)
            if len(parts) not in (2, 3) or not parts[0] or not parts[1]:
                raise InputError(f"line {lineno}: expected 'src,dst[,weight]', got {line!r}")
            key = (parts[0], parts[1])
            if key in seen:
                raise InputError(f"line {lineno}: duplicate edge {parts[0]!r} -> {parts[1]!r}")
            seen.add(key)
            e = (node(parts[0], lineno), node(parts[1], lineno))
            edges.append(e)
            if len(parts) == 3:
                try:
                    w = float(parts[2])
                except ValueError:
                    raise InputError(f"line {lineno}: bad weight {parts[2]!r}") from None
                if not math.isfinite(w) or w == 0.0:
                    raise InputError(f"line {lineno}: weight must be finite and nonzero")
                weights[e] = w
            else:
                unweighted += 1

    if require_header and n_header is None:
        raise InputError(f"{path}: missing required n= header")
    if weights and unweighted:
        raise InputError(f"{path}: weights must be given for all edges or for none")
    if n_header is not None:
        n = n_header
        node_ids = tuple(str(i) for i in range(n))
    else:
        if not edges:
            raise InputError(f"{path}: empty edge list needs an n= header to define the node count")
        n = len(order)
        node_ids = tuple(order)
    return DirectedGraph(n, frozenset(edges), weights or None, node_ids)


def parse_groups(path: str, g: DirectedGraph, merge_tol: float = 0.0) -> DynamicsAssignment:
    """Parse a per-node group file against the node IDs of ``g``.

    ``merge_tol`` applies only to value mode: pole values within the
    tolerance fall into one group (grouping is by exact equality when 0).
    """
    ids = g.node_ids if g.node_ids is not None else tuple(str(i) for i in range(g.n))
    index = {label: i for i, label in enumerate(ids)}
    raw: dict[int, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = _split(line)
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise InputError(f"line {lineno}: expected 'node_id,group', got {line!r}")
            if parts[0] not in index:
                raise InputError(f"line {lineno}: unknown node {parts[0]!r}")
            i = index[parts[0]]
            if i in raw:
                raise InputError(f"line {lineno}: node {parts[0]!r} assigned twice")
            raw[i] = parts[1]
    missing = [ids[i] for i in range(g.n) if i not in raw]
    if missing:
        raise InputError(f"{path}: missing group assignment for node {missing[0]!r}"
                         + (f" and {len(missing) - 1} more" if len(missing) > 1 else ""))

    def as_value(tok: str) -> Optional[float]:
        try:
            v = float(tok)
        except ValueError:
            return None
        return v if math.isfinite(v) else None

    values = [as_value(raw[i]) for i in range(g.n)]
    numeric = sum(v is not None for v in values)
    if numeric == g.n:
        return DynamicsAssignment.from_gamma(values, merge_tol=merge_tol)
    if numeric == 0:
        return DynamicsAssignment.from_labels(tuple(raw[i] for i in range(g.n)))
    raise InputError(f"{path}: mixed group labels and numeric pole values")


def edge_list_text(g: DirectedGraph) -> str:
    """Render ``g`` in the edge-list format.

    The ``n=`` header (which preserves isolated nodes) is emitted when the
    node IDs are the canonical integers; graphs with free-form string IDs
    get a plain edge list, since the header form requires integer IDs.
    """
    canonical = g.node_ids is None or g.node_ids == tuple(str(i) for i in range(g.n))
    lines = [f"n={g.n}"] if canonical else []
    for u, v in g.sorted_edges():
        row = f"{g.label_of(u)},{g.label_of(v)}"
        if g.has_weights:
            row += f",{g.weights[(u, v)]!r}"
        lines.append(row)
    return "\n".join(lines) + "\n" if lines else ""


def write_edge_list(path: str, g: DirectedGraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(edge_list_text(g))
