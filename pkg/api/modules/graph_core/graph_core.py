"""
API 封装层：图核心能力 (api/modules/graph_core)
图来源统一用 source 字典描述：{"family": ...} / {"graph6": ...} / {"text": ...} / {"path": ...}。
实际实现位于 modules/graph_core_module/graph_core_module.py
"""

from typing import Any, Dict, Mapping

from core.api_registry import error_response, register_api
from modules.graph_core_module import (
    Graph,
    emit_edge_list,
    emit_graph6,
    resolve_graph,
)


def graph_payload(graph: Graph) -> Dict[str, Any]:
    """图的 JSON 描述（顶点/边数、graph6、标签与书图坐标）"""
    payload: Dict[str, Any] = {
        "graph": graph.name,
        "vertex_count": graph.vertex_count,
        "edge_count": graph.edge_count,
        "graph6": emit_graph6(graph),
        "labels": list(graph.labels) if graph.labels is not None else None,
    }
    if graph.book is not None:
        payload["book"] = {
            "m": graph.book.m,
            "n": graph.book.n,
            "spinal": list(graph.book.spinal),
        }
    if graph.fiber_shape is not None:
        payload["fiber_shape"] = list(graph.fiber_shape)
    return payload


@register_api(
    name="graph_core.describe",
    inputs=["source"],
    outputs=["success", "kind", "graph", "vertex_count", "edge_count", "graph6", "labels"],
    description="解析图来源并返回基本信息",
)
def describe(source: Mapping[str, str]) -> Dict[str, Any]:
    try:
        graph = resolve_graph(source)
        return {"success": True, "kind": "family", **graph_payload(graph)}
    except Exception as e:
        return error_response(e)


@register_api(
    name="graph_core.emit",
    inputs=["source", "fmt"],
    outputs=["success", "text"],
    description="把图输出为 graph6 或边列表文本",
)
def emit(source: Mapping[str, str], fmt: str = "graph6") -> Dict[str, Any]:
    try:
        graph = resolve_graph(source)
        if fmt == "graph6":
            text = emit_graph6(graph) + "\n"
        elif fmt == "edgelist":
            text = emit_edge_list(graph)
        else:
            raise ValueError(f"未知的图格式 '{fmt}'")
        return {"success": True, "text": text}
    except Exception as e:
        return error_response(e)
