"""
API 封装层：公式表格工作流 (api/workflow)
实际实现位于 workflows/table_workflow.py
"""

from typing import Any, Dict, List, Optional

from core.api_registry import error_response, register_api
from workflows.table_workflow import render_table


@register_api(
    name="tables.render",
    inputs=["family", "m_values", "n_values", "params", "fmt"],
    outputs=["success", "text"],
    description="把闭式参数渲染为 CSV / Markdown 表格",
)
def api_render_table(family: str, m_values: List[int], n_values: Optional[List[int]] = None,
                     params: Optional[List[str]] = None, fmt: str = "csv") -> Dict[str, Any]:
    try:
        return {"success": True, "text": render_table(family, m_values, n_values, params, fmt)}
    except Exception as e:
        return error_response(e)
