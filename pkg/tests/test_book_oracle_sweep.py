"""
书图公式与穷举搜索的逐格比对。小书图跑得很快，B_{4,5} / B_{4,6} 标记为 slow。
"""

import pytest

from modules.closed_forms_module import (
    Exact,
    book_paint_cost,
    book_witness_coloring,
)
from modules.graph_core_module import make_book
from modules.sym_params_module import SearchConfig, is_distinguishing, paint_cost
from workflows.verify_books_workflow import BookVerificationWorkflow

SMALL_BOOKS = [(4, 2), (4, 3), (4, 4), (5, 2), (5, 3), (5, 4), (3, 2), (3, 3)]


@pytest.fixture(scope="module")
def workflow():
    return BookVerificationWorkflow(SearchConfig())


@pytest.mark.parametrize("m, n", SMALL_BOOKS)
def test_formula_cells_match_oracle(workflow, m, n):
    cells = workflow.verify_book(m, n)
    assert cells
    assert all(c["status"] == "match" for c in cells), [c for c in cells if c["status"] != "match"]


@pytest.mark.slow
@pytest.mark.parametrize("m, n", [(4, 5), (4, 6)])
def test_formula_cells_match_oracle_larger(workflow, m, n):
    cells = workflow.verify_book(m, n)
    assert all(c["status"] == "match" for c in cells)


@pytest.mark.slow
def test_paint_cost_in_large_n_regime():
    assert book_paint_cost(4, 6, 3) == Exact(6)
    assert paint_cost(make_book(4, 6), 3) == 6


@pytest.mark.parametrize("m, n", [(4, 2), (4, 3), (4, 4), (5, 3), (5, 4)])
def test_witness_coloring_is_distinguishing_and_optimal(m, n):
    graph = make_book(m, n)
    for d in (2, 3):
        expected = book_paint_cost(m, n, d)
        coloring = book_witness_coloring(m, n, d)
        assert is_distinguishing(graph, coloring)
        if isinstance(expected, Exact):
            assert sum(1 for c in coloring if c) == expected.value


def test_report_counts_and_discrepancies(workflow):
    report = workflow.run([4], [3])
    assert report["kind"] == "verify_report"
    assert report["passed"] is True
    assert report["mismatches"] == 0
    assert report["discrepancies"] == []
    params = {(c["param"], c["d"]) for c in report["cells"]}
    assert params == {("dist", None), ("det", None), ("fdist", None),
                      ("paint_cost", 2), ("paint_cost", 3)}


def test_budget_exhaustion_marks_cells_skipped():
    report = BookVerificationWorkflow(SearchConfig(budget=1)).run([4], [4])
    assert report["skipped"] > 0
    assert report["mismatches"] == 0
    assert report["passed"] is True
    skipped = [c for c in report["cells"] if c["status"] == "skipped"]
    assert all(c["oracle"] is None and c["match"] is None for c in skipped)


def test_empty_range_passes(workflow):
    report = workflow.run([], [2, 3])
    assert report["cells"] == [] and report["passed"] is True
