"""
自动同构搜索模块

等价划分细化与个体化回溯，计算（可着色）图的自同构群。
"""

from .aut_search_module import (
    AutomorphismSearch,
    AutSearchStats,
    OrderedPartition,
    automorphism_group,
    individualize,
    initial_partition,
    is_asymmetric,
    refine,
)

__version__ = "1.0.0"
__all__ = [
    "AutomorphismSearch",
    "AutSearchStats",
    "OrderedPartition",
    "automorphism_group",
    "individualize",
    "initial_partition",
    "is_asymmetric",
    "refine",
]
