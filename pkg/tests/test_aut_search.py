import math
import random

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from conftest import brute_automorphisms
from modules.aut_search_module import (
    AutomorphismSearch,
    OrderedPartition,
    automorphism_group,
    individualize,
    initial_partition,
    is_asymmetric,
    refine,
)
from modules.graph_core_module import (
    Graph,
    asymmetric6_graph,
    from_networkx,
    make_book,
    make_family,
    path_graph,
    to_networkx,
)


def small_connected_graphs():
    return [
        from_networkx(g, name=f"atlas{k}")
        for k, g in enumerate(nx.graph_atlas_g())
        if 1 <= g.number_of_nodes() <= 6 and nx.is_connected(g)
    ]


class TestPartitions:
    def test_refine_splits_by_degree(self):
        refined = refine(path_graph(4), OrderedPartition.unit(4))
        assert refined.cells == ((0, 3), (1, 2))

    def test_individualize_then_refine_is_discrete_on_path(self):
        p = refine(path_graph(4), individualize(refine(path_graph(4), OrderedPartition.unit(4)), 0))
        assert p.is_discrete()
        assert p.as_sequence() == [0, 3, 2, 1]

    def test_initial_partition_orders_cells_by_color(self):
        p = initial_partition(path_graph(4), [2, 0, 2, 1])
        assert p.cells == ((1,), (3,), (0, 2))
        assert p.target_cell() == 2

    def test_unit_partition_of_empty_graph(self):
        assert OrderedPartition.unit(0).cells == ()

    def test_refine_separates_star_centre(self):
        refined = refine(make_family("complete_bipartite:5,1"), OrderedPartition.unit(6))
        assert sorted(refined.cells, key=len) == [(0,), (1, 2, 3, 4, 5)]

    def test_refine_separates_book_spine(self):
        refined = refine(make_book(4, 3), OrderedPartition.unit(8))
        assert sorted(refined.cells, key=len) == [(0, 1), (2, 3, 4, 5, 6, 7)]

    def test_refine_is_idempotent(self):
        rng = random.Random(11)
        for g in small_connected_graphs()[::7]:
            colors = [rng.randrange(2) for _ in range(g.vertex_count)]
            for start in (OrderedPartition.unit(g.vertex_count), initial_partition(g, colors)):
                once = refine(g, start)
                assert refine(g, once) == once, g.name
                if g.vertex_count:
                    v = once.cells[0][0]
                    twice = refine(g, individualize(once, v))
                    assert refine(g, twice) == twice, g.name


@pytest.mark.parametrize("family, order", [
    ("cycle:5", 10),
    ("hypercube:3", 48),
    ("book:4,3", 12),
    ("book:4,6", 1440),
    ("book:3,4", 48),
    ("complete_bipartite:5,1", 120),
    ("complete:5", 120),
    ("path:5", 2),
    ("asymmetric6", 1),
    ("product:2", 2),
])
def test_known_group_orders(family, order):
    assert automorphism_group(make_family(family)).order() == order


def test_book_orbits_and_elements():
    group = automorphism_group(make_book(4, 3))
    assert group.orbits() == [[0, 1], [2, 3, 4, 5, 6, 7]]
    members = group.elements(10 ** 6)
    assert len(members) == len(set(members)) == 12


@pytest.mark.parametrize("family", ["cycle:6", "hypercube:3", "book:4,3", "complete_bipartite:2,3"])
def test_colored_group_is_a_subgroup(family):
    g = make_family(family)
    rng = random.Random(5)
    full = automorphism_group(g)
    for _ in range(10):
        colors = [rng.randrange(3) for _ in range(g.vertex_count)]
        colored = automorphism_group(g, colors)
        assert full.order() % colored.order() == 0
        for perm in colored.generators:
            assert perm in full
            assert all(colors[perm(v)] == colors[v] for v in range(g.vertex_count))


def test_asymmetric6_is_asymmetric():
    assert is_asymmetric(asymmetric6_graph())
    assert len(brute_automorphisms(asymmetric6_graph())) == 1


def test_every_generator_is_an_automorphism():
    g = make_book(5, 3)
    edges = set(g.edges())
    for perm in automorphism_group(g).generators:
        assert all(tuple(sorted((perm(u), perm(v)))) in edges for u, v in edges)


def test_search_statistics_are_collected():
    search = AutomorphismSearch(make_family("hypercube:3"))
    group = search.run()
    assert search.stats.generators == len(group.generators) > 0
    assert search.stats.leaves >= search.stats.generators
    assert search.stats.nodes >= search.stats.leaves


def test_empty_and_single_vertex():
    assert automorphism_group(Graph.from_edges(0, [])).order() == 1
    assert automorphism_group(Graph.from_edges(1, [])).order() == 1


def test_petersen_against_networkx():
    g = from_networkx(nx.petersen_graph())
    matcher = GraphMatcher(to_networkx(g), to_networkx(g))
    assert automorphism_group(g).order() == sum(1 for _ in matcher.isomorphisms_iter()) == 120


def test_disconnected_graph():
    g = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
    assert automorphism_group(g).order() == 2 ** 3 * math.factorial(3)


@pytest.mark.slow
def test_orders_match_brute_force_on_small_connected_graphs():
    for g in small_connected_graphs():
        assert automorphism_group(g).order() == len(brute_automorphisms(g)), g.name


@pytest.mark.slow
def test_color_preserving_orders_match_brute_force():
    rng = random.Random(2024)
    graphs = small_connected_graphs()
    for g in rng.sample(graphs, 40):
        colors = [rng.randrange(2) for _ in range(g.vertex_count)]
        assert automorphism_group(g, colors).order() == len(brute_automorphisms(g, colors)), g.name
