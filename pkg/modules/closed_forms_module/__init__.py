"""
闭式公式模块

书图与 K_{2^m}□H 的对称性破缺参数公式、推论界、构造性见证与差异标注。
"""

from .closed_forms_module import (
    BookParams,
    BoundPair,
    Discrepancy,
    Exact,
    Interval,
    ProductParams,
    book_det,
    book_dist,
    book_edge_count,
    book_fdist,
    book_Nj,
    book_nj,
    book_paint_cost,
    book_params,
    book_upper_paint_bounds,
    book_upper_paint_cost,
    book_vertex_count,
    book_witness_coloring,
    integer_root_ceil,
    product_frugal_witness,
    product_is_distinguishing,
    product_params,
    worked_example_discrepancies,
)

__version__ = "1.0.0"
__all__ = [
    "BookParams",
    "BoundPair",
    "Discrepancy",
    "Exact",
    "Interval",
    "ProductParams",
    "book_det",
    "book_dist",
    "book_edge_count",
    "book_fdist",
    "book_Nj",
    "book_nj",
    "book_paint_cost",
    "book_params",
    "book_upper_paint_bounds",
    "book_upper_paint_cost",
    "book_vertex_count",
    "book_witness_coloring",
    "integer_root_ceil",
    "product_frugal_witness",
    "product_is_distinguishing",
    "product_params",
    "worked_example_discrepancies",
]
