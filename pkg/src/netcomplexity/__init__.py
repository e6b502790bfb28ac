"""Structural complexity of directed networks of first-order linear nodes.

The index of a network is the minimal state dimension of its response after
deconvolving each node's isolated dynamics: a joint measure of topology and
of how heterogeneously dynamics are assigned to nodes.  It is computed
combinatorially (matching numbers of the subgraphs induced by grouping
nodes with identical dynamics) and validated numerically (residue ranks and
state-space realization oracles).
"""

from .complexity import (
    ComplexityReport,
    DynamicsAssignment,
    GenericityResult,
    ResidueSet,
    bounds,
    coupling_matrix,
    genericity_check,
    mcmillan_oracle,
    min_inputs,
    numerical_complexity,
    residues,
    sample_pole_values,
    sample_weights,
    structural_complexity,
)
from .fileio import InputError, edge_list_text, parse_edge_list, parse_groups, write_edge_list
from .generators import (
    GeneratorSpec,
    barabasi_albert,
    generate,
    random_partition,
    rewire_uniform,
    watts_strogatz,
)
from .graph import (
    DirectedGraph,
    NodePartition,
    SparsityPattern,
    adjacency_pattern,
    degrees,
    edge_cut,
    graph_from_adjacency,
    matching_number,
    maximum_matching,
    sinks,
    sources,
    structural_rank,
)
from .harness import (
    ExperimentConfig,
    ResultRecord,
    derive_seed,
    run_compute,
    run_experiment,
    run_table1,
)
from .linalg import numerical_rank, observability_stack

__version__ = "0.1.0"

__all__ = [
    "ComplexityReport",
    "DirectedGraph",
    "DynamicsAssignment",
    "ExperimentConfig",
    "GeneratorSpec",
    "GenericityResult",
    "InputError",
    "NodePartition",
    "ResidueSet",
    "ResultRecord",
    "SparsityPattern",
    "adjacency_pattern",
    "barabasi_albert",
    "bounds",
    "coupling_matrix",
    "degrees",
    "derive_seed",
    "edge_cut",
    "edge_list_text",
    "generate",
    "genericity_check",
    "graph_from_adjacency",
    "matching_number",
    "maximum_matching",
    "mcmillan_oracle",
    "min_inputs",
    "numerical_complexity",
    "numerical_rank",
    "observability_stack",
    "parse_edge_list",
    "parse_groups",
    "random_partition",
    "residues",
    "rewire_uniform",
    "run_compute",
    "run_experiment",
    "run_table1",
    "sample_pole_values",
    "sample_weights",
    "sinks",
    "sources",
    "structural_complexity",
    "structural_rank",
    "watts_strogatz",
    "write_edge_list",
]
