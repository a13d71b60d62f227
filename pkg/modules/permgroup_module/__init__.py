"""
置换群模块

置换运算、Schreier–Sims 稳定链以及各类稳定子查询。
"""

from .permgroup_module import (
    EnumerationCapError,
    Permutation,
    PermutationError,
    PermutationGroup,
    build_group,
    compose,
    elements,
    identity,
    invert,
    is_identity,
    orbits,
    pointwise_stabilizer,
    setwise_stabilizer,
)

__version__ = "1.0.0"
__all__ = [
    "EnumerationCapError",
    "Permutation",
    "PermutationError",
    "PermutationGroup",
    "build_group",
    "compose",
    "elements",
    "identity",
    "invert",
    "is_identity",
    "orbits",
    "pointwise_stabilizer",
    "setwise_stabilizer",
]
