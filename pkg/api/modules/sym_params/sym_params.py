"""
API 封装层：对称性破缺参数 (api/modules/sym_params)
实际实现位于 modules/sym_params_module/sym_params_module.py
"""

from typing import Any, Dict, List, Mapping, Optional, Union

from core.api_registry import error_response, register_api
from modules.graph_core_module import DomainError, resolve_graph, resolve_vertices
from modules.permgroup_module import setwise_stabilizer
from modules.sym_params_module import (
    SearchConfig,
    class_complements_are_determining,
    get_analyzer,
    load_search_config,
)


def _config(budget: Optional[int], jobs: Optional[int], include_witnesses: Optional[bool],
            config_file: Optional[str]) -> SearchConfig:
    return load_search_config(config_file=config_file).with_overrides(
        budget=budget, jobs=jobs, include_witnesses=include_witnesses
    )


def _witness(g) -> Optional[Dict[str, Any]]:
    return g.to_dict() if g is not None else None


@register_api(
    name="sym_params.full_report",
    inputs=["source", "budget", "jobs", "include_witnesses", "config_file"],
    outputs=["success", "partial", "report"],
    description="计算 dist、det、ρ^d、ρ^u、ρ^ℓ 与 fdist 的完整报告",
)
def api_full_report(source: Mapping[str, str],
                    budget: Optional[int] = None,
                    jobs: Optional[int] = None,
                    include_witnesses: Optional[bool] = None,
                    config_file: Optional[str] = None) -> Dict[str, Any]:
    try:
        graph = resolve_graph(source)
        config = _config(budget, jobs, include_witnesses, config_file)
        report = get_analyzer(graph, config).full_report()
        return {
            "success": True,
            "partial": report.partial,
            "report": report.to_dict(include_witnesses=config.include_witnesses),
        }
    except Exception as e:
        return error_response(e)


_PARAMETERS = ("dist", "det", "paint_cost", "cost_number", "upper_paint", "lower_paint",
               "fdist", "fdist_by_set_distinguishing")


@register_api(
    name="sym_params.evaluate",
    inputs=["source", "param", "d", "budget", "jobs"],
    outputs=["success", "param", "d", "value", "witness"],
    description="计算单个参数（paint_cost / cost_number 需要 d）",
)
def api_evaluate(source: Mapping[str, str], param: str, d: Optional[int] = None,
                 budget: Optional[int] = None, jobs: Optional[int] = None) -> Dict[str, Any]:
    try:
        if param not in _PARAMETERS:
            raise DomainError(f"未知参数 '{param}'，可选: {', '.join(_PARAMETERS)}")
        if param in ("paint_cost", "cost_number") and d is None:
            raise DomainError(f"{param} 需要颜色数 d")
        analyzer = get_analyzer(resolve_graph(source), _config(budget, jobs, None, None))
        witness: Optional[List[int]] = None
        if param == "dist":
            value = analyzer.distinguishing_number()
            witness = list(analyzer.distinguishing_coloring())
        elif param in ("det", "lower_paint"):
            result = analyzer.determining_number()
            value, witness = result.value, list(result.witness)
        elif param == "paint_cost":
            result = analyzer.max_color_class(d)
            value, witness = analyzer.n - result.value, list(result.witness)
        elif param == "cost_number":
            result = analyzer.cost_number(d)
            value, witness = result.value, list(result.witness)
        elif param == "upper_paint":
            value = analyzer.upper_paint_cost()
        elif param == "fdist":
            value = analyzer.frugal_distinguishing_number()
        else:
            value = analyzer.fdist_by_set_distinguishing()
        return {"success": True, "param": param, "d": d, "value": value, "witness": witness}
    except Exception as e:
        return error_response(e)


@register_api(
    name="sym_params.check_coloring",
    inputs=["source", "coloring"],
    outputs=["success", "kind", "distinguishing", "witness"],
    description="判断着色是否区分；否则给出保持着色的非平凡自同构",
)
def api_check_coloring(source: Mapping[str, str], coloring: List[int]) -> Dict[str, Any]:
    try:
        graph = resolve_graph(source)
        analyzer = get_analyzer(graph)
        violation = analyzer.preserving_automorphism(coloring)
        distinguishing = violation is None
        return {
            "success": True,
            "kind": "coloring_check",
            "graph": graph.name,
            "coloring": list(coloring),
            "distinguishing": distinguishing,
            "class_complements_determining": (
                class_complements_are_determining(graph, coloring, analyzer) if distinguishing else None
            ),
            "witness": _witness(violation),
        }
    except Exception as e:
        return error_response(e)


@register_api(
    name="sym_params.check_set",
    inputs=["source", "points", "set_colors"],
    outputs=["success", "kind", "determining", "setstab_order", "set_distinguishing_number"],
    description="判定集与集合区分检查；set_colors 与 points 一一对应",
)
def api_check_set(source: Mapping[str, str], points: List[Union[str, int]],
                  set_colors: Optional[List[int]] = None) -> Dict[str, Any]:
    try:
        graph = resolve_graph(source)
        analyzer = get_analyzer(graph)
        indices = resolve_vertices(graph, points)
        chosen = sorted(set(indices))
        stabilizer = setwise_stabilizer(analyzer.group, chosen)
        sdn = analyzer.set_distinguishing_number(chosen)
        payload: Dict[str, Any] = {
            "success": True,
            "kind": "set_check",
            "graph": graph.name,
            "points": chosen,
            "determining": analyzer.is_determining_set(chosen),
            "fixing_witness": _witness(analyzer.fixing_automorphism(chosen)),
            "setstab_order": stabilizer.order(),
            "set_distinguishing_number": sdn.value,
            "set_distinguishing_witness": list(sdn.witness),
        }
        if set_colors is not None:
            if len(set_colors) != len(indices):
                raise DomainError(f"集合着色长度 {len(set_colors)} 与集合大小 {len(indices)} 不一致")
            colors = dict(zip(indices, set_colors))
            violation = analyzer.set_violation(chosen, colors)
            payload["set_colors"] = [colors[v] for v in chosen]
            payload["set_distinguishing"] = violation is None
            payload["witness"] = _witness(violation)
        return payload
    except Exception as e:
        return error_response(e)
