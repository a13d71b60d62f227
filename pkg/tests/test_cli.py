"""
命令行端到端测试：直接调用 main(argv)，从 capsys 读取 stdout / stderr。
"""

import json

import jsonschema
import pytest

from modules.cli_module import load_output_schema, main, parse_int_range


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRanges:
    def test_inclusive_range(self):
        assert parse_int_range("4..6") == [4, 5, 6]

    def test_reversed_range_is_empty(self):
        assert parse_int_range("3..2") == []

    def test_comma_list(self):
        assert parse_int_range("473,703") == [473, 703]


class TestAnalyze:
    def test_cycle(self, capsys):
        code, out, _ = run(capsys, "analyze", "--family", "cycle:5")
        assert code == 0
        report = json.loads(out)
        assert report["kind"] == "param_report"
        assert report["dist"] == 3
        assert report["det"] == 2
        assert report["paint_cost"] == {"3": 2}
        assert report["fdist"] == 3
        assert report["partial"] is False
        jsonschema.validate(report, load_output_schema())

    def test_book(self, capsys):
        code, out, _ = run(capsys, "analyze", "--family", "book:4,3", "--no-witness")
        report = json.loads(out)
        assert code == 0
        assert (report["det"], report["fdist"]) == (2, 3)
        assert "witnesses" not in report

    def test_graph6_input(self, capsys):
        code, out, _ = run(capsys, "analyze", "--graph6", "Dhc")
        assert code == 0
        assert json.loads(out)["dist"] == 3

    def test_edge_list_file(self, capsys, tmp_path):
        path = tmp_path / "star.txt"
        path.write_text("4 3\n0 1\n0 2\n0 3\n", encoding="utf-8")
        code, out, _ = run(capsys, "analyze", "--input", str(path))
        assert code == 0
        assert json.loads(out)["det"] == 2

    def test_malformed_graph6_exits_with_input_error(self, capsys):
        code, out, err = run(capsys, "analyze", "--graph6", "D?")
        assert code == 2
        assert out == ""
        assert "GraphParseError" in err

    def test_budget_exhaustion_is_partial(self, capsys):
        code, out, _ = run(capsys, "analyze", "--family", "hypercube:3", "--budget", "10")
        assert code == 3
        report = json.loads(out)
        assert report["partial"] is True
        assert report["dist"] is None
        assert report["skipped"] == ["dist", "paint_cost", "upper_paint", "fdist"]

    def test_output_is_deterministic(self, capsys):
        _, first, _ = run(capsys, "analyze", "--family", "complete_bipartite:5,1")
        _, second, _ = run(capsys, "analyze", "--family", "complete_bipartite:5,1")
        assert first == second

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run(capsys, "analyze", "--family", "cycle:5", "--output", str(target))
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["dist"] == 3


class TestGraphCommands:
    def test_family_json(self, capsys):
        code, out, _ = run(capsys, "family", "--family", "book:4,3")
        data = json.loads(out)
        assert code == 0
        assert data["kind"] == "family"
        assert data["vertex_count"] == 8

    def test_family_graph6(self, capsys):
        code, out, _ = run(capsys, "family", "--family", "cycle:5", "--format", "graph6")
        assert code == 0
        assert out.strip() == "Dhc"

    def test_group(self, capsys):
        code, out, _ = run(capsys, "group", "--family", "book:4,3")
        data = json.loads(out)
        assert code == 0
        assert data["order"] == 12

    def test_check_coloring(self, capsys):
        code, out, _ = run(capsys, "check-coloring", "--family", "cycle:5", "--coloring", "0,0,0,0,0")
        data = json.loads(out)
        assert code == 0
        assert data["distinguishing"] is False
        assert data["witness"] is not None

    def test_check_coloring_length_mismatch(self, capsys):
        code, _, err = run(capsys, "check-coloring", "--family", "cycle:5", "--coloring", "0,1")
        assert code == 2
        assert "DomainError" in err

    def test_bad_coloring_argument(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["check-coloring", "--family", "cycle:5", "--coloring", "a,b"])
        assert info.value.code == 2

    def test_check_set_by_labels(self, capsys):
        code, out, _ = run(capsys, "check-set", "--family", "hypercube:3", "--set", "000,010,110")
        data = json.loads(out)
        assert code == 0
        assert data["determining"] is True
        assert data["setstab_order"] == 2


class TestTables:
    def test_book_table(self, capsys):
        code, out, _ = run(capsys, "table", "--family", "book", "--m", "8", "--n", "473,703",
                           "--params", "det,dist,fdist")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "m,n,det,dist,fdist,notes"
        assert lines[1] == "8,473,472,3,80,"
        assert lines[2].startswith("8,703,702,3,119,fdist: 算例为 118")

    def test_product_table(self, capsys):
        code, out, _ = run(capsys, "table", "--family", "product", "--m", "1,6,7")
        assert code == 0
        assert out.splitlines() == [
            "m,dist,paint2,det,fdist,notes",
            "1,2,1,1,2,",
            "6,2,192,63,12,",
            "7,2,448,127,20,",
        ]

    def test_markdown_footnotes(self, capsys):
        code, out, _ = run(capsys, "table", "--family", "book", "--m", "8", "--n", "703",
                           "--format", "markdown")
        assert code == 0
        assert out.startswith("| m | n | det | dist | fdist | upper_paint |")
        assert "2760[^" in out
        assert "[^1]:" in out and "[^2]:" in out

    def test_unsupported_family(self, capsys):
        code, _, err = run(capsys, "table", "--family", "cycle:5", "--m", "5")
        assert code == 4
        assert "UnsupportedFamilyError" in err

    def test_product_without_asymmetric_factor(self, capsys):
        code, _, _ = run(capsys, "table", "--family", "product", "--m", "3")
        assert code == 2


class TestVerifyBooks:
    def test_empty_range(self, capsys):
        code, out, _ = run(capsys, "verify-books", "--m", "4", "--n", "3..2")
        report = json.loads(out)
        assert code == 0
        assert report["cells"] == [] and report["passed"] is True

    def test_small_sweep_csv(self, capsys):
        code, out, _ = run(capsys, "verify-books", "--m", "4", "--n", "2..3", "--format", "csv")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "m,n,d,param,formula,oracle,match,status"
        assert all(line.endswith(",true,match") for line in lines[1:])
