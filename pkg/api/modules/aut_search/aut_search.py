"""
API 封装层：自同构群计算 (api/modules/aut_search)
实际实现位于 modules/aut_search_module/aut_search_module.py
"""

from typing import Any, Dict, List, Mapping, Optional

from core.api_registry import error_response, register_api
from modules.aut_search_module import automorphism_group
from modules.graph_core_module import DomainError, resolve_graph


@register_api(
    name="aut_search.automorphism_group",
    inputs=["source", "colors"],
    outputs=["success", "kind", "graph", "order", "base", "generators", "orbits"],
    description="计算（保色）自同构群的阶、轨道与生成元",
)
def api_automorphism_group(source: Mapping[str, str], colors: Optional[List[int]] = None) -> Dict[str, Any]:
    try:
        graph = resolve_graph(source)
        if colors is not None and len(colors) != graph.vertex_count:
            raise DomainError(f"着色长度 {len(colors)} 与顶点数 {graph.vertex_count} 不一致")
        group = automorphism_group(graph, colors)
        return {
            "success": True,
            "kind": "group",
            "graph": graph.name,
            "vertex_count": graph.vertex_count,
            "order": group.order(),
            "base": list(group.base),
            "generators": [g.to_list() for g in group.generators],
            "orbits": group.orbits(),
            "labels": list(graph.labels) if graph.labels is not None else None,
        }
    except Exception as e:
        return error_response(e)


@register_api(
    name="aut_search.is_asymmetric",
    inputs=["source"],
    outputs=["success", "asymmetric"],
    description="判断图是否没有非平凡自同构",
)
def api_is_asymmetric(source: Mapping[str, str]) -> Dict[str, Any]:
    try:
        graph = resolve_graph(source)
        return {"success": True, "asymmetric": automorphism_group(graph).is_trivial()}
    except Exception as e:
        return error_response(e)
