"""Shortest non-separating and non-disconnecting s-t path solvers."""

from .certificate import VARIANT_NONDISC, VARIANT_NONSEP, PathCertificate, check_path
from .chordal import (
    ForbiddenSets,
    LayerDecomposition,
    forbidden_separators,
    is_minimal_separator,
    layered_decomposition,
    solve_chordal_nonsep,
)
from .graph import (
    Graph,
    Path,
    bfs_distances,
    components,
    connected_after_edge_removal,
    connected_after_vertex_removal,
    contract_connected_set,
    format_graph,
    induced_subgraph,
    is_chordal,
    is_connected,
    mask_members,
    mask_of,
    parse_graph,
    perfect_elimination_order,
)
from .matroid import (
    LinearMatroid,
    Matrix,
    build_cographic_matroid,
    is_independent,
    rank_of,
    truncate,
)
from .nondisc import (
    extend,
    is_legitimate,
    prune_t_cut_vertex,
    solve_nondisconnecting,
)
from .oracle import brute_solve, enumerate_paths
from .reductions import (
    Instance,
    MccInstance,
    add_pendant,
    ball_contraction,
    mcc_gadget,
    or_composition,
)
from .repfamily import EdgeSetFamily, representative_family

__version__ = "0.1.0"
