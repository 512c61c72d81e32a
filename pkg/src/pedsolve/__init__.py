"""Exact perfect edge domination on P6-free graphs.

Minimum and minimum-weight PED-sets, exact counts of PED-sets and DIMs,
a brute-force oracle for verification, dominating-structure search, and
the NSF hardness gadget.
"""

from .coloring import (
    BLACK,
    UNCOLORED,
    WHITE,
    YELLOW,
    Color,
    Coloring,
    PedClass,
    classify_ped,
    coloring_from_ped,
    is_ped,
    is_valid_partial,
    is_valid_total,
    ped_from_coloring,
    ped_weight,
    validate_partial,
    validate_total,
)
from .errors import (
    GraphParseError,
    NoStructureError,
    NotP6FreeError,
    OracleBoundError,
)
from .gadget import attach_gadget, is_nsf, verify_reduction
from .gen import generate_p6_free
from .graph import (
    Bipartition,
    EdgeWeightMap,
    Graph,
    VertexWeightMap,
    bipartition,
    connected_components,
    derive_vertex_weights,
    format_graph,
    graph_from_edges,
    induced_subgraph,
    is_connected,
    is_dissociation_set,
    is_independent_set,
    parse_graph,
    parse_weighted_graph,
)
from .oracle import (
    OracleReport,
    enumerate_peds,
    enumerate_valid_colorings,
    find_induced_p6,
    is_p6_free,
    oracle_solve,
)
from .solver import (
    SolveResult,
    config_one,
    config_one_dim_branch,
    config_three,
    config_two,
    count_dims,
    enumerate_cycle_patterns,
    extend_cycle_coloring,
    procedure_one,
    procedure_two,
    solve,
)
from .structure import (
    CompleteBipartite,
    Cycle,
    find_dominating_complete_bipartite,
    find_dominating_induced_c6,
    find_dominating_structure,
    maximalize_complete_bipartite,
    verify_structure,
)

__version__ = "0.1.0"
