from hypothesis import given, settings, strategies as st

from modules.aut_search_module import automorphism_group, is_asymmetric
from modules.closed_forms_module import (
    product_frugal_witness,
    product_is_distinguishing,
    product_params,
)
from modules.graph_core_module import (
    asymmetric6_graph,
    cartesian_product,
    complete_graph,
    make_family,
)
from modules.sym_params_module import (
    SymmetryAnalyzer,
    is_determining_set,
    is_distinguishing,
)

H = asymmetric6_graph()
K4_H = cartesian_product(complete_graph(4), H)


def test_factor_is_asymmetric():
    assert H.vertex_count == 6
    assert is_asymmetric(H)


def test_product_automorphisms_permute_fibers():
    assert K4_H.fiber_shape == (4, 6)
    assert automorphism_group(K4_H).order() == 24


def test_smallest_product_end_to_end():
    graph = make_family("product:2")
    analyzer = SymmetryAnalyzer(graph)
    expected = product_params(1)
    assert analyzer.distinguishing_number() == expected.dist
    assert analyzer.paint_cost(2) == expected.paint2
    assert analyzer.determining_number().value == expected.det
    assert analyzer.frugal_distinguishing_number() == expected.fdist


FIBER_PATTERNS = [
    (0, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 1),
    (1, 1, 0, 0, 0, 0),
    (2, 0, 1, 0, 0, 0),
    (0, 2, 0, 0, 1, 1),
]


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=24, max_size=24))
def test_fiber_rule_agrees_with_oracle_on_random_two_colorings(coloring):
    assert product_is_distinguishing(4, H, coloring) == is_distinguishing(K4_H, coloring)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=24, max_size=24))
def test_fiber_rule_agrees_with_oracle_on_random_three_colorings(coloring):
    assert product_is_distinguishing(4, H, coloring) == is_distinguishing(K4_H, coloring)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.sampled_from(FIBER_PATTERNS), min_size=4, max_size=4))
def test_fiber_rule_agrees_with_oracle_on_repeated_patterns(fibers):
    coloring = [c for pattern in fibers for c in pattern]
    assert product_is_distinguishing(4, H, coloring) == is_distinguishing(K4_H, coloring)
    assert product_is_distinguishing(4, H, coloring) == (len(set(fibers)) == 4)


def test_frugal_witness_on_small_product():
    coloring, chosen = product_frugal_witness(4, H)
    assert len(chosen) == 3
    assert is_determining_set(K4_H, chosen)
    assert is_distinguishing(K4_H, coloring)
    assert max(coloring) + 1 == 2


def test_frugal_witness_uses_fdist_colors():
    # |H| = m，只有 m = 6 能配上 asymmetric6
    coloring, chosen = product_frugal_witness(64, H)
    expected = product_params(6)
    assert len(chosen) == expected.det == 63
    assert max(coloring) + 1 == expected.fdist == 12
    assert product_is_distinguishing(64, H, coloring)
