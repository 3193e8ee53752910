"""Connected induced subgraph counts of trees and unicyclic graphs, the extremal
constructions for a prescribed number of cut vertices, and tools to check them."""

from .constructions import build_delta, build_omega, predicted_maximizers
from .count import (
    count_cis,
    count_cis_oracle,
    count_cis_rooted,
    count_cis_rooted_oracle,
    count_cis_unicyclic,
    count_construction_closed_form,
    tree_count_rooted,
)
from .enumeration import EnumerationQuery, enumerate_unicyclic, enumerate_with_cuts, find_extremizers
from .graph import (
    Graph,
    GraphError,
    ParseError,
    canonical_code,
    cut_vertices,
    decompose_unicyclic,
    girth,
    parse_graph,
    wiener_index,
)

__all__ = [
    "EnumerationQuery",
    "Graph",
    "GraphError",
    "ParseError",
    "build_delta",
    "build_omega",
    "canonical_code",
    "count_cis",
    "count_cis_oracle",
    "count_cis_rooted",
    "count_cis_rooted_oracle",
    "count_cis_unicyclic",
    "count_construction_closed_form",
    "cut_vertices",
    "decompose_unicyclic",
    "enumerate_unicyclic",
    "enumerate_with_cuts",
    "find_extremizers",
    "girth",
    "parse_graph",
    "predicted_maximizers",
    "tree_count_rooted",
    "wiener_index",
]
