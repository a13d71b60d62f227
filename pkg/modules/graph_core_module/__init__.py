"""
图核心模块

不可变简单图、graph6 / 边列表格式以及书图、超立方体、积图等图族生成器。
"""

from .graph_core_module import (
    BookLayout,
    DomainError,
    FamilySpec,
    Graph,
    GraphParseError,
    GraphValidationError,
    asymmetric6_graph,
    cartesian_product,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    emit_edge_list,
    from_networkx,
    hypercube_graph,
    label_index,
    load_graph,
    make_book,
    make_family,
    parse_edge_list,
    parse_family_spec,
    path_graph,
    resolve_graph,
    resolve_vertices,
    to_networkx,
)
from .graph6_codec import emit_graph6, parse_graph6

__version__ = "1.0.0"
__all__ = [
    "BookLayout",
    "DomainError",
    "FamilySpec",
    "Graph",
    "GraphParseError",
    "GraphValidationError",
    "asymmetric6_graph",
    "cartesian_product",
    "complete_bipartite_graph",
    "complete_graph",
    "cycle_graph",
    "emit_edge_list",
    "emit_graph6",
    "from_networkx",
    "hypercube_graph",
    "label_index",
    "load_graph",
    "make_book",
    "make_family",
    "parse_edge_list",
    "parse_family_spec",
    "parse_graph6",
    "path_graph",
    "resolve_graph",
    "resolve_vertices",
    "to_networkx",
]
