"""
API 封装层：书图公式验证工作流 (api/workflow)
实际实现位于 workflows/verify_books_workflow.py
"""

from typing import Any, Dict, List, Optional

from core.api_registry import error_response, register_api
from modules.sym_params_module import load_search_config
from workflows.verify_books_workflow import run_book_verification


@register_api(
    name="verify_books.run",
    inputs=["m_values", "n_values", "budget", "jobs"],
    outputs=["success", "report"],
    description="书图公式与穷举结果逐格比对",
)
def api_verify_books(m_values: List[int], n_values: List[int],
                     budget: Optional[int] = None, jobs: Optional[int] = None) -> Dict[str, Any]:
    try:
        config = load_search_config().with_overrides(budget=budget, jobs=jobs)
        return {"success": True, "report": run_book_verification(m_values, n_values, config)}
    except Exception as e:
        return error_response(e)
