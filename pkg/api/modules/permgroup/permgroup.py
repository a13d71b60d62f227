"""
API 封装层：置换群能力 (api/modules/permgroup)
群总是取自图的自同构群；顶点可用编号或标签引用。
"""

from typing import Any, Dict, List, Mapping, Union

from core.api_registry import error_response, register_api
from modules.aut_search_module import automorphism_group
from modules.graph_core_module import resolve_graph, resolve_vertices
from modules.permgroup_module import pointwise_stabilizer, setwise_stabilizer


def _stabilizer_payload(group, points: List[int]) -> Dict[str, Any]:
    return {
        "success": True,
        "points": points,
        "order": group.order(),
        "generators": [g.to_list() for g in group.generators],
        "orbits": group.orbits(),
    }


@register_api(
    name="permgroup.setwise_stabilizer",
    inputs=["source", "points"],
    outputs=["success", "points", "order", "generators", "orbits"],
    description="自同构群中整体保持顶点集的子群",
)
def api_setwise_stabilizer(source: Mapping[str, str], points: List[Union[str, int]]) -> Dict[str, Any]:
    try:
        graph = resolve_graph(source)
        chosen = sorted(set(resolve_vertices(graph, points)))
        return _stabilizer_payload(setwise_stabilizer(automorphism_group(graph), chosen), chosen)
    except Exception as e:
        return error_response(e)


@register_api(
    name="permgroup.pointwise_stabilizer",
    inputs=["source", "points"],
    outputs=["success", "points", "order", "generators", "orbits"],
    description="自同构群中逐点固定顶点集的子群",
)
def api_pointwise_stabilizer(source: Mapping[str, str], points: List[Union[str, int]]) -> Dict[str, Any]:
    try:
        graph = resolve_graph(source)
        chosen = sorted(set(resolve_vertices(graph, points)))
        return _stabilizer_payload(pointwise_stabilizer(automorphism_group(graph), chosen), chosen)
    except Exception as e:
        return error_response(e)
