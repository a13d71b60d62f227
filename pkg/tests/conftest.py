"""
测试公共设施：框架根目录入路径、常用图夹具与暴力对照实现。
暴力实现只用于 ≤ 7 个顶点的小图。
"""

import sys
from itertools import permutations, product
from pathlib import Path
from typing import List, Sequence, Tuple

import pytest

FRAMEWORK_ROOT = Path(__file__).resolve().parent.parent
if str(FRAMEWORK_ROOT) not in sys.path:
    sys.path.insert(0, str(FRAMEWORK_ROOT))

from core.services import get_service_manager  # noqa: E402
from modules.graph_core_module import (  # noqa: E402
    Graph,
    complete_bipartite_graph,
    cycle_graph,
    hypercube_graph,
    make_book,
)


def brute_automorphisms(graph: Graph, colors: Sequence[int] = None) -> List[Tuple[int, ...]]:
    """逐个检查全部双射"""
    n = graph.vertex_count
    edges = set(graph.edges())
    found = []
    for images in permutations(range(n)):
        if colors is not None and any(colors[images[v]] != colors[v] for v in range(n)):
            continue
        if all((min(images[u], images[v]), max(images[u], images[v])) in edges for u, v in edges):
            found.append(images)
    return found


def brute_is_distinguishing(autos: List[Tuple[int, ...]], coloring: Sequence[int]) -> bool:
    identity = tuple(range(len(coloring)))
    return all(
        g == identity or any(coloring[g[v]] != coloring[v] for v in range(len(coloring)))
        for g in autos
    )


def brute_is_determining(autos: List[Tuple[int, ...]], points: Sequence[int]) -> bool:
    n = len(autos[0])
    identity = tuple(range(n))
    return all(g == identity or any(g[v] != v for v in points) for g in autos)


def brute_paint_cost(graph: Graph, autos: List[Tuple[int, ...]], d: int) -> int:
    """ρ^d：所有 d-区分着色中 |V| - 最大颜色类；不可区分时返回 None"""
    n = graph.vertex_count
    best = None
    for coloring in product(range(d), repeat=n):
        if brute_is_distinguishing(autos, coloring):
            largest = max(coloring.count(c) for c in range(d))
            best = largest if best is None else max(best, largest)
    return None if best is None else n - best


@pytest.fixture(scope="session")
def registry_loaded():
    """导入 api/** 封装层以注册全部能力"""
    manager = get_service_manager()
    manager.load_project_modules()
    return manager


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def q3() -> Graph:
    return hypercube_graph(3)


@pytest.fixture
def k51() -> Graph:
    return complete_bipartite_graph(5, 1)


@pytest.fixture
def book43() -> Graph:
    return make_book(4, 3)
