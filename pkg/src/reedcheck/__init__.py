"""reedcheck: exact verification workbench for Reed's bound
chi(G) <= ceil((Delta(G) + omega(G) + 1) / 2) on hereditary graph
classes defined by pairs of forbidden induced subgraphs.
"""

from ._kernels import USING_NUMBA
from .enumeration import (
    KNOWN_COUNTS,
    MAX_ENUM_ORDER,
    SearchResult,
    counterexample_search,
    enumerate_graphs,
    sample_gnp,
)
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    VertexSet,
    build,
    canonical_form,
    complement,
    complete_graph,
    cycle_graph,
    degree,
    empty_graph,
    from_graph6,
    induced_subgraph,
    is_isomorphic,
    max_degree,
    path_graph,
    to_graph6,
)
from .invariants import (
    BudgetExhaustedError,
    Coloring,
    chromatic_number,
    clique_number,
    greedy_bound,
    is_k_colorable,
    is_proper,
)
from .kempe import (
    AuditFacts,
    ExtensionProblem,
    audit_facts,
    bicolor_component,
    extend_coloring,
    kempe_swap,
    reed_color,
    unique_color_neighbors,
)
from .patterns import (
    ClassSpec,
    Embedding,
    Pattern,
    catalog,
    class_by_name,
    class_registry,
    contains_induced,
    find_induced,
    is_in_class,
    is_self_complementary,
    pattern_by_name,
)
from .reed import ReedReport, check_reed, classify, reed_bound

__version__ = "0.1.0"
