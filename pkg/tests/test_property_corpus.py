"""
全部 ≤ 6 个顶点的连通图上的参数不变式，部分结果用暴力枚举复核。
"""

import random

import networkx as nx
import pytest

from conftest import brute_automorphisms, brute_is_determining, brute_paint_cost
from modules.graph_core_module import from_networkx
from modules.sym_params_module import SymmetryAnalyzer, class_complements_are_determining, is_distinguishing

pytestmark = pytest.mark.slow

CORPUS = [
    from_networkx(g, name=f"atlas{k}")
    for k, g in enumerate(nx.graph_atlas_g())
    if 1 <= g.number_of_nodes() <= 6 and nx.is_connected(g)
]


def test_corpus_size():
    assert len(CORPUS) == 1 + 1 + 2 + 6 + 21 + 112


@pytest.mark.parametrize("graph", CORPUS, ids=lambda g: g.name)
def test_parameter_chain(graph):
    analyzer = SymmetryAnalyzer(graph)
    dist = analyzer.distinguishing_number()
    det = analyzer.determining_number().value
    assert dist <= det + 1

    previous = None
    for d in range(dist, det + 2):
        rho = analyzer.paint_cost(d)
        assert det <= rho
        if previous is not None:
            assert rho <= previous
        previous = rho
        witness = analyzer.max_color_class(d).witness
        assert is_distinguishing(graph, witness)
        assert class_complements_are_determining(graph, witness, analyzer)
    assert analyzer.paint_cost(det + 1) == det

    fdist = analyzer.frugal_distinguishing_number()
    assert fdist <= det + 1
    assert analyzer.fdist_by_set_distinguishing() == fdist
    if dist == 2:
        assert analyzer.cost_number(2).value == analyzer.paint_cost(2)


def test_determining_numbers_match_brute_force():
    from itertools import combinations

    for graph in CORPUS:
        autos = brute_automorphisms(graph)
        expected = next(
            k for k in range(graph.vertex_count + 1)
            if any(brute_is_determining(autos, s) for s in combinations(range(graph.vertex_count), k))
        )
        assert SymmetryAnalyzer(graph).determining_number().value == expected, graph.name


def test_paint_costs_match_brute_force_on_sample():
    rng = random.Random(11)
    for graph in rng.sample(CORPUS, 30):
        autos = brute_automorphisms(graph)
        analyzer = SymmetryAnalyzer(graph)
        for d in range(analyzer.distinguishing_number(), 4):
            assert analyzer.paint_cost(d) == brute_paint_cost(graph, autos, d), (graph.name, d)
