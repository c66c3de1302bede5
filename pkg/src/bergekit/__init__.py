"""Berge-path / Berge-cycle extremal toolkit for r-uniform hypergraphs."""

from .constructions import (
    ConstructionInfeasible,
    ExtremalParams,
    PartitionedConstruction,
    build_complete,
    build_extremal,
    build_gkl1,
    build_tree_like,
    disjoint_union,
)
from .formulas import (
    BoundValue,
    binom,
    eg_cycle_bound,
    eg_path_bound,
    extremal_count,
    f_star,
    fkl_cycle_bound,
    gkl_bound,
    threshold_N,
)
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    canonical_form,
    degree,
    is_connected,
    neighborhood,
    peel,
)
from .search import (
    BergeCycle,
    BergePath,
    SearchLimits,
    SearchOutcome,
    endpoint_neighborhood,
    extend_or_rotate,
    has_berge_cycle_of_length_at_least,
    has_berge_path_of_length,
    longest_berge_path,
    rotations,
    shift_back,
    verify_cycle,
    verify_path,
)

__version__ = "0.1.0"
