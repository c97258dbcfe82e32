"""Wiener indices of graphs and their orientations."""

from .constructions import (
    ClosedForm,
    Stage,
    TkInstance,
    build_dk,
    build_dk_stage,
    build_tk,
    claim5_report,
    closed_form,
    closed_form_int,
    find_center_vertex,
    is_zigzag,
)
from .graph import (
    ConnectivityError,
    Direction,
    DistanceMatrix,
    GraphError,
    MixedGraph,
    OrientationAssignment,
    OverlapError,
    ParseError,
    WrongKindError,
    all_pairs,
    apply_orientation,
    converse,
    distances_from,
    parse_mixed_graph,
    serialize_mixed_graph,
    wiener_between,
    wiener_directed,
    wiener_max,
    wiener_max_between,
    wiener_undirected,
)
from .reduction import (
    GadgetInstance,
    build_gadget,
    hampath_bruteforce,
    m_of_n,
    orient_from_hampath,
    verify_forward_reduction,
)
from .solver import (
    Objective,
    SearchReport,
    Strategy,
    orient_local_search,
    orient_max_exact,
    orient_min_exact,
    tournament_max,
)
from .transitive import decide_min_equals_m, find_transitive_orientation, is_transitive

__version__ = "0.1.0"
