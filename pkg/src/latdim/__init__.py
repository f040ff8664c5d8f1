"""Zero-divisor graphs of finite lattices and their strong metric dimension.

Pipeline: finite lattices (including blow-ups of Boolean lattices) ->
zero-divisor graphs and complements -> strong resolving graphs ->
exact dimensions via vertex cover, with closed forms and brute-force
oracles cross-checking each other.
"""

from .applications import (
    PIRSpec,
    ReducedRingSpec,
    VectorSpaceSpec,
    blowup_equivalence_check,
    component_graph,
    intersection_graph,
    maximal_graph,
    reduced_ring_graphs,
    total_graph,
)
from .blowup import (
    BlowUpElement,
    BlowUpSpec,
    blowup_join,
    blowup_meet,
    build_blowup,
    parse_blowup_spec,
    verify_blowup_structure,
)
from .errors import LatdimError
from .graphs import (
    SimpleGraph,
    all_pairs_distances,
    complement,
    complete_graph,
    components,
    diameter,
    disjoint_union,
    graph_from_edge_list,
    is_connected,
    join_complete,
    to_dot,
    to_edge_list,
)
from .lattice import (
    AnnihilatorClassPartition,
    FiniteLattice,
    boolean_lattice,
    lattice_from_leq,
    lattice_from_pairs,
    parse_lattice_spec,
    product_of_chains,
)
from .solvers import (
    DimensionReport,
    closed_form_sdim_blowup,
    max_independent_set,
    metric_dimension_bruteforce,
    strong_metric_dimension,
    strong_metric_dimension_bruteforce,
    vertex_cover_number,
)
from .strong_resolving import (
    SRGraph,
    blowup_sr_closed_form,
    boundary,
    is_maximally_distant,
    is_resolving_set,
    is_strong_resolving_set,
    mmd_pairs,
    sr_of_join_decomposition,
    strong_resolving_graph,
    strongly_resolves,
)
from .zerodiv import (
    check_connectivity_theorem,
    complement_zero_divisor_graph,
    zero_divisor_graph,
)

__version__ = "0.1.0"
