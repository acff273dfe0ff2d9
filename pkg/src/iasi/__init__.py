"""Arithmetic integer additive set-indexers on finite simple graphs."""

from .constructors import (
    ConstructionOutcome,
    label_complement,
    label_corona,
    label_identical_biarithmetic,
    label_join,
    label_product,
    label_union,
)
from .graph import (
    BipartiteCertificate,
    Graph,
    GraphError,
    GraphFormatError,
    ProductVertex,
    cartesian_product,
    complement,
    complete_graph,
    corona,
    cycle_graph,
    disjoint_union,
    find_triangle,
    induced_subgraph,
    is_bipartite,
    join,
    path_graph,
    star_graph,
)
from .labeling import (
    ClassificationReport,
    check_adjacency_condition,
    check_uniform,
    classify,
    induced_edge_label,
    verify_iasi,
)
from .numeric_sets import APDescriptor, NotAPError, SetLabel, ap_of, deterministic_index, make_ap, sumset
from .search import SearchBounds, SearchResult, census, search

__version__ = "0.1.0"
