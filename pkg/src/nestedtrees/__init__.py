"""Exact spanning tree counts for double nested (bipartite chain) graphs."""

from .chain_model import (
    BipartiteGraph,
    ChainSpec,
    DegreeProfile,
    degree_profile,
    expand,
    parse_edge_list,
    parse_spec,
    swap_colors,
    validate_spec,
)
from .errors import (
    CellMismatch,
    ChainError,
    Disconnected,
    EmptySpec,
    LengthMismatch,
    NonPositiveCell,
    NotNested,
    OddCycle,
    RecognitionError,
    ResourceLimit,
    SingularInput,
    TraceDivergence,
    ZeroPivot,
)
from .kirchhoff_oracle import cofactor, count_oracle, kirchhoff_matrix, paper_reduction_trace
from .recognizer import bipartition, recognize, recognize_chain
from .tree_counter import (
    build_tridiagonal,
    cell_factors,
    count_spanning_trees,
    lu_pivots,
    run_counter,
    tau_complete_bipartite,
)

__version__ = "0.1.0"
