"""Hypergraphic matroid computations driven by minimum s-t cuts.

The package solves rank, independence, polytope separation, partition
inequality separation, strength, fractional arboricity, and network
reinforcement on hypergraphs, each reduced to a short sequence of
minimum-cut problems on small auxiliary digraphs.  All arithmetic is
exact (fractions.Fraction); every public routine returns certificates
that are re-checked internally before being handed out.
"""

from .core import (
    DuplicateVertexInEdge,
    EdgeVector,
    Hyperedge,
    Hypergraph,
    HypergraphFormatError,
    LoopPresentError,
    Partition,
    as_fraction,
    format_rational,
    parse_hypergraph,
    serialize_hypergraph,
)
from .mincut import (
    INF,
    CutResult,
    FlowNetwork,
    NoFiniteCutError,
    min_st_cut,
    min_st_cut_sequence,
)
from .gadgets import (
    GadgetCutInterpretation,
    GadgetGraph,
    build_arboricity_gadget,
    build_independence_gadget,
    build_polytope_gadget,
    build_supermodular_gadget,
    interpret_gadget_cut,
    interpret_independence_cut,
)
from .partition_oracle import (
    GreedyState,
    PartitionOracleResult,
    cover_demand,
    min_partition,
)
from .matroid import (
    BoundViolation,
    InPolytope,
    RankResult,
    SeparationOutcome,
    SetViolation,
    independence_test_incremental,
    is_independent,
    max_weight_hyperforest,
    rank,
    separate_polytope,
)
from .packing import ArboricityResult, StrengthResult, arboricity, strength
from .reinforcement import (
    DualState,
    MergeDescriptor,
    ReinforcementResult,
    canonicalize_merge,
    reinforce,
)

__version__ = "0.1.0"

__all__ = [
    "ArboricityResult",
    "BoundViolation",
    "CutResult",
    "DualState",
    "DuplicateVertexInEdge",
    "EdgeVector",
    "FlowNetwork",
    "GadgetCutInterpretation",
    "GadgetGraph",
    "GreedyState",
    "Hyperedge",
    "Hypergraph",
    "HypergraphFormatError",
    "INF",
    "InPolytope",
    "LoopPresentError",
    "MergeDescriptor",
    "NoFiniteCutError",
    "Partition",
    "PartitionOracleResult",
    "RankResult",
    "ReinforcementResult",
    "SeparationOutcome",
    "SetViolation",
    "StrengthResult",
    "arboricity",
    "as_fraction",
    "build_arboricity_gadget",
    "build_independence_gadget",
    "build_polytope_gadget",
    "build_supermodular_gadget",
    "canonicalize_merge",
    "cover_demand",
    "format_rational",
    "independence_test_incremental",
    "interpret_gadget_cut",
    "interpret_independence_cut",
    "is_independent",
    "max_weight_hyperforest",
    "min_partition",
    "min_st_cut",
    "min_st_cut_sequence",
    "parse_hypergraph",
    "rank",
    "reinforce",
    "separate_polytope",
    "serialize_hypergraph",
    "strength",
]
