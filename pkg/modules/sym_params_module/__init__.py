"""
对称性破缺参数模块

区分数、判定数、涂色代价 ρ^d / ρ^u / ρ^ℓ、代价数 ρ_d、节俭区分数以及集合区分的精确计算。
"""

from .coloring_search import (
    BudgetExceededError,
    canonical_colorings,
    estimate_candidates,
    stirling2,
)
from .search_config import SearchConfig, load_search_config
from .sym_params_module import (
    ParamReport,
    SearchResult,
    SymmetryAnalyzer,
    SymmetryOracle,
    class_complements_are_determining,
    clear_analyzer_cache,
    cost_number,
    determining_number,
    determining_set_coloring,
    distinguishing_number,
    fdist_by_set_distinguishing,
    frugal_distinguishing_number,
    full_report,
    get_analyzer,
    is_determining_set,
    is_distinguishing,
    is_set_distinguishing,
    lower_paint_cost,
    max_color_class,
    paint_cost,
    set_distinguishing_number,
    upper_paint_cost,
)

__version__ = "1.0.0"
__all__ = [
    "BudgetExceededError",
    "ParamReport",
    "SearchConfig",
    "SearchResult",
    "SymmetryAnalyzer",
    "SymmetryOracle",
    "canonical_colorings",
    "class_complements_are_determining",
    "clear_analyzer_cache",
    "cost_number",
    "determining_number",
    "determining_set_coloring",
    "distinguishing_number",
    "estimate_candidates",
    "fdist_by_set_distinguishing",
    "frugal_distinguishing_number",
    "full_report",
    "get_analyzer",
    "is_determining_set",
    "is_distinguishing",
    "is_set_distinguishing",
    "load_search_config",
    "lower_paint_cost",
    "max_color_class",
    "paint_cost",
    "set_distinguishing_number",
    "stirling2",
    "upper_paint_cost",
]
