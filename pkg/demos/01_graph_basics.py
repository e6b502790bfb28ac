"""Graph primitives walkthrough: degrees, sinks, edge-cuts, matchings, bounds.

Run from the repository root:

    python demos/01_graph_basics.py
"""

from netcomplexity import (
    DirectedGraph,
    NodePartition,
    bounds,
    degrees,
    edge_cut,
    matching_number,
    maximum_matching,
    min_inputs,
    sinks,
    sources,
)

print("=" * 60)
print("A directed path 0 -> 1 -> 2 and a 5-cycle")
print("=" * 60)

path = DirectedGraph(3, {(0, 1), (1, 2)})
cycle = DirectedGraph(5, {(i, (i + 1) % 5) for i in range(5)})

indeg, outdeg = degrees(path)
print(f"path in-degrees  {indeg}")
print(f"path out-degrees {outdeg}")
print(f"path sources {sorted(sources(path))}, sinks {sorted(sinks(path))}")

# A matching is a set of edges with pairwise distinct start nodes and
# pairwise distinct end nodes.  Both path edges qualify: starts {0,1},
# ends {1,2}.
print(f"\nmatching number of the path : {matching_number(path)}")
print(f"matching number of the cycle: {matching_number(cycle)}")
print(f"one maximum matching of the cycle (start -> end): {maximum_matching(cycle)}")

print()
print("=" * 60)
print("Edge-cuts: splitting the edge set along a node partition")
print("=" * 60)

# Group nodes {0,1} vs {2}; the outgoing cut assigns each edge to the
# block of its start node.
part = NodePartition(2, (0, 0, 1))
for direction in ("outgoing", "ingoing"):
    subs = edge_cut(path, part, direction)
    print(f"{direction:9s}: " + " | ".join(str(sorted(s.edges)) for s in subs))

print()
print("=" * 60)
print("Bounds and the minimum input count")
print("=" * 60)

star = DirectedGraph(4, {(0, 1), (0, 2), (0, 3)})
for name, g in [("path", path), ("cycle", cycle), ("out-star", star)]:
    lo, hi = bounds(g)
    print(f"{name:8s}: index bounds [{lo}, {hi}], "
          f"inputs needed for structural controllability: {min_inputs(g)}")
