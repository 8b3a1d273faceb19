"""Graph searches as label orders: run, certify, and compose them.

A search is a strict partial order on label sets; running it with a
tie-break permutation is fully deterministic.  The package provides the
reference engine, an exact partition-refinement engine for total orders,
certifying recognizers for the classic searches, multi-sweep recognition
pipelines, and tooling to verify the extension hierarchy between searches.
"""

from .certificate import Certificate
from .certify import (
    check_bfs,
    check_dfs,
    check_generic,
    check_lbfs,
    check_ldfs,
    check_ordering,
    recognize,
    replay_witness,
)
from .engine import EngineState, check_fixpoint, check_pairwise, eligible_set, left_dates, tbls_run
from .fastengine import OrderedPartition, TotalityViolation, refine, tbls_fast
from .graph import (
    Graph,
    ParseError,
    PrefixNeighborTables,
    VertexOrdering,
    parse_graph,
    parse_ordering,
    prefix_neighbor_tables,
    reverse_ordering,
)
from .hierarchy import (
    HierarchyReport,
    LayeredFixtureReport,
    all_connected_graphs,
    check_label_extension,
    layered_fixture_check,
    random_connected_graph,
    verify_hierarchy,
    witness_graph,
)
from .multisweep import (
    PipelineResult,
    SweepTrace,
    cocomp_pipeline,
    gen_permutation_graph,
    gen_unit_interval_graph,
    is_cocomp_ordering,
    is_unit_interval_ordering,
    recognize_unit_interval,
    run_search,
    sweep_sequence,
)
from .orders import (
    BFS,
    BUILTIN_ORDERS,
    DFS,
    GEN,
    LBFS,
    LDFS,
    MCS,
    MNS,
    NULL,
    SEVEN_ORDERS,
    LabelOrder,
    LabelSet,
    Rel,
    compare,
    label_set,
    meet,
    parse_order_token,
    set_difference,
    umax,
    umin,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
