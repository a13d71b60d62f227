"""
API 封装层：闭式公式 (api/modules/closed_forms)
大整数原样保留在 JSON 中。
"""

from typing import Any, Dict, List, Optional

from core.api_registry import error_response, register_api
from modules.closed_forms_module import (
    book_params,
    book_upper_paint_bounds,
    book_witness_coloring,
    product_is_distinguishing,
    product_params,
)
from modules.graph_core_module import asymmetric6_graph


@register_api(
    name="closed_forms.book_params",
    inputs=["m", "n", "d"],
    outputs=["success", "params"],
    description="书图 B_{m,n} 的公式参数（含算例差异标注）",
)
def api_book_params(m: int, n: int, d: Optional[int] = None) -> Dict[str, Any]:
    try:
        return {"success": True, "params": book_params(m, n, d).to_dict()}
    except Exception as e:
        return error_response(e)


@register_api(
    name="closed_forms.book_upper_paint_bounds",
    inputs=["m", "n"],
    outputs=["success", "bounds"],
    description="ρ^u(B_{m,n}) 的推论上下界",
)
def api_book_upper_paint_bounds(m: int, n: int) -> Dict[str, Any]:
    try:
        return {"success": True, "bounds": book_upper_paint_bounds(m, n).to_dict()}
    except Exception as e:
        return error_response(e)


@register_api(
    name="closed_forms.book_witness_coloring",
    inputs=["m", "n", "d"],
    outputs=["success", "coloring"],
    description="构造 B_{m,n} 的最优 d-区分着色",
)
def api_book_witness_coloring(m: int, n: int, d: int) -> Dict[str, Any]:
    try:
        return {"success": True, "coloring": book_witness_coloring(m, n, d)}
    except Exception as e:
        return error_response(e)


@register_api(
    name="closed_forms.product_params",
    inputs=["m"],
    outputs=["success", "params"],
    description="K_{2^m}□H 的 (dist, ρ², det, fdist)",
)
def api_product_params(m: int) -> Dict[str, Any]:
    try:
        return {"success": True, "params": product_params(m).to_dict()}
    except Exception as e:
        return error_response(e)


@register_api(
    name="closed_forms.product_is_distinguishing",
    inputs=["q", "coloring"],
    outputs=["success", "distinguishing"],
    description="按纤维模式判断 K_q□asymmetric6 上的着色是否区分",
)
def api_product_is_distinguishing(q: int, coloring: List[int]) -> Dict[str, Any]:
    try:
        return {"success": True, "distinguishing": product_is_distinguishing(q, asymmetric6_graph(), coloring)}
    except Exception as e:
        return error_response(e)
