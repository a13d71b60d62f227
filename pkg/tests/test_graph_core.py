import networkx as nx
import pytest

from modules.graph_core_module import (
    BookLayout,
    DomainError,
    Graph,
    GraphParseError,
    GraphValidationError,
    asymmetric6_graph,
    cartesian_product,
    complete_graph,
    emit_edge_list,
    from_networkx,
    label_index,
    load_graph,
    make_book,
    make_family,
    parse_edge_list,
    parse_family_spec,
    resolve_graph,
    resolve_vertices,
    to_networkx,
)


class TestGraphInvariants:
    def test_self_loop_rejected(self):
        with pytest.raises(GraphValidationError):
            Graph.from_edges(3, [(1, 1)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(GraphValidationError):
            Graph.from_edges(3, [(0, 3)])

    def test_asymmetric_adjacency_rejected(self):
        with pytest.raises(GraphValidationError):
            Graph(vertex_count=2, adjacency=(frozenset({1}), frozenset()))

    def test_duplicate_labels_rejected(self):
        with pytest.raises(GraphValidationError):
            Graph.from_edges(2, [(0, 1)], labels=["a", "a"])

    def test_empty_graph(self):
        g = Graph.from_edges(0, [])
        assert g.vertex_count == 0 and g.edges() == []

    def test_graphs_are_hashable_and_compare_by_structure(self):
        assert make_book(4, 2) == make_book(4, 2)
        assert hash(make_book(4, 2)) == hash(make_book(4, 2))


class TestBook:
    def test_counts(self, book43):
        assert book43.vertex_count == 8
        assert book43.edge_count == 10

    def test_layout_numbering(self):
        layout = BookLayout(4, 3)
        assert layout.spinal == (0, 1)
        assert layout.path_vertex(1, 1) == 2
        assert layout.path_vertex(2, 3) == 7
        assert layout.page(2) == [4, 5]
        assert layout.coordinate(0) == "v0"
        assert layout.coordinate(1) == "v3"
        assert layout.coordinate(3) == "v2_1"

    def test_layout_rejects_bad_coordinates(self):
        with pytest.raises(DomainError):
            BookLayout(4, 3).path_vertex(3, 1)
        with pytest.raises(DomainError):
            BookLayout(4, 3).path_vertex(1, 4)

    def test_each_page_closes_a_cycle(self):
        g = make_book(5, 4)
        for i in range(1, 5):
            page = g.book.page(i)
            assert g.has_edge(0, page[0])
            assert g.has_edge(page[-1], 1)
            assert all(g.has_edge(a, b) for a, b in zip(page, page[1:]))
        assert g.has_edge(0, 1)

    def test_book_with_three_cycle_pages(self):
        g = make_book(3, 4)
        assert g.vertex_count == 6
        assert sorted(g.degree(v) for v in range(6)) == [2, 2, 2, 2, 5, 5]

    def test_rejects_small_m(self):
        with pytest.raises(DomainError):
            make_book(2, 3)

    @pytest.mark.parametrize("m", range(3, 11))
    @pytest.mark.parametrize("n", range(1, 11))
    def test_counts_on_grid(self, m, n):
        g = make_book(m, n)
        assert g.vertex_count == 2 + n * (m - 2)
        assert g.edge_count == 1 + n * (m - 1)
        assert (g.book.m, g.book.n) == (m, n)


class TestFamilies:
    def test_hypercube_labels(self, q3):
        assert q3.labels[5] == "101"
        assert q3.edge_count == 12
        assert all(q3.degree(v) == 3 for v in range(8))

    def test_complete_bipartite_smaller_side_first(self, k51):
        assert k51.degree(0) == 5
        assert all(k51.degree(v) == 1 for v in range(1, 6))

    def test_product_fibers(self):
        g = cartesian_product(complete_graph(2), asymmetric6_graph())
        assert g.vertex_count == 12
        assert g.edge_count == 2 * 6 + 6
        assert g.fiber_shape == (2, 6)
        assert g.labels[7] == "(1,1)"
        assert g.has_edge(1, 7)

    def test_family_spec_grammar(self):
        assert str(parse_family_spec("book:4,3")) == "book:4,3"
        assert parse_family_spec("asymmetric6").args == ()
        assert make_family("product:2").vertex_count == 12
        assert make_family("path:4").edge_count == 3

    @pytest.mark.parametrize("text", ["wheel:5", "book:4", "cycle:x", "", "Book:4,3"])
    def test_bad_family_specs(self, text):
        with pytest.raises(GraphParseError):
            parse_family_spec(text)

    def test_family_minimums(self):
        with pytest.raises(DomainError):
            make_family("cycle:2")


class TestEdgeList:
    def test_parse_and_emit(self):
        text = "3 2\n0 1\n1 2\n"
        g = parse_edge_list(text)
        assert g.edges() == [(0, 1), (1, 2)]
        assert emit_edge_list(g) == text

    @pytest.mark.parametrize("text, line", [
        ("3 2\n0 1\n", 2),
        ("3 1\n0 3\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("three\n", 1),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(GraphParseError) as info:
            parse_edge_list(text)
        assert info.value.offset == line

    def test_load_graph_detects_format(self):
        assert load_graph("2 1\n0 1\n").edges() == [(0, 1)]
        assert load_graph("A_").edges() == [(0, 1)]
        with pytest.raises(GraphParseError):
            load_graph("   ")


class TestVertexReferences:
    def test_labels_win(self, q3):
        assert label_index(q3, "010") == 2
        assert label_index(q3, "7") == 7
        assert resolve_vertices(q3, ["000", "101", 6]) == [0, 5, 6]

    def test_unknown_reference(self, q3, c5):
        with pytest.raises(GraphParseError):
            label_index(q3, "2x")
        with pytest.raises(GraphParseError):
            label_index(c5, "5")


class TestResolveGraph:
    def test_exactly_one_source(self):
        with pytest.raises(GraphParseError):
            resolve_graph({})
        with pytest.raises(GraphParseError):
            resolve_graph({"family": "cycle:5", "graph6": "Dhc"})

    def test_sources(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("3 2\n0 1\n1 2\n", encoding="utf-8")
        assert resolve_graph({"path": str(path)}).edge_count == 2
        assert resolve_graph({"graph6": "Dhc"}).edge_count == 5
        assert resolve_graph({"family": "cycle:5"}).name == "cycle:5"
        with pytest.raises(GraphParseError):
            resolve_graph({"path": str(tmp_path / "missing.txt")})


def test_networkx_adapters(q3):
    nx_graph = to_networkx(q3)
    assert nx.is_isomorphic(nx_graph, nx.hypercube_graph(3))
    back = from_networkx(nx_graph)
    assert back.edges() == q3.edges()
