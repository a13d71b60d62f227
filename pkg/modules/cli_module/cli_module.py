"""
命令行模块 (CLI Module)

子命令：analyze / family / group / check-coloring / check-set / table / verify-books。
所有计算都通过注册中心按名称调用能力；JSON 输出在写出前用随仓库发布的 Schema 校验。
日志写到 stderr，结果写到 stdout 或 --output 指定的文件。
"""

import argparse
import csv
import io
import json
import logging
import sys
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import jsonschema

from core.api_registry import get_registry
from core.services import FRAMEWORK_ROOT, get_service_manager

from .variables import (
    ERROR_EXIT_CODES,
    EXIT_BUDGET,
    EXIT_INPUT,
    EXIT_INTERNAL,
    EXIT_OK,
    OUTPUT_SCHEMA_PATH,
    RANGE_SEPARATOR,
    VERIFY_CSV_COLUMNS,
)

logger = logging.getLogger(__name__)


class CommandFailed(Exception):
    """能力调用返回 success=False"""

    def __init__(self, result: Dict[str, Any]):
        super().__init__(result.get("message", ""))
        self.error = result.get("error", "")
        self.exit_code = ERROR_EXIT_CODES.get(self.error, EXIT_INTERNAL)


# ========== 参数解析 ==========

def parse_int_range(text: str) -> List[int]:
    """"a..b"（含两端，b < a 时为空）、"a,b,c" 或单个整数"""
    text = text.strip()
    if not text:
        return []
    try:
        if RANGE_SEPARATOR in text:
            lo, hi = text.split(RANGE_SEPARATOR, 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"无法解析整数范围 '{text}'")


def parse_int_list(text: str) -> List[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"颜色必须为整数列表，收到 '{text}'")
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("颜色必须为非负整数")
    return values


def parse_token_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"需要正整数，收到 '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"需要正整数，收到 {value}")
    return value


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", help="家族描述符，如 cycle:5、book:4,3、hypercube:3、product:4")
    group.add_argument("--graph6", help="内联 graph6 字符串")
    group.add_argument("--input", help="graph6 或边列表文件路径（'-' 表示标准输入）")


def _add_search_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--budget", type=positive_int, help="穷举候选数上限（覆盖配置与 SYMBREAK_BUDGET）")
    parser.add_argument("--jobs", type=positive_int, help="并行检查的线程数")
    parser.add_argument("--config", help="搜索配置文件路径")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="输出 DEBUG 日志到 stderr")
    common.add_argument("--output", help="结果写入文件而不是标准输出")

    parser = argparse.ArgumentParser(prog="symbreak", description="图的对称性破缺参数计算与公式验证")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", parents=[common], help="计算完整参数报告")
    _add_graph_source(analyze)
    _add_search_flags(analyze)
    analyze.add_argument("--no-witness", action="store_true", help="报告中省略见证")

    family = sub.add_parser("family", parents=[common], help="输出图的基本信息")
    _add_graph_source(family)
    family.add_argument("--format", choices=["json", "graph6", "edgelist"], default="json")

    group = sub.add_parser("group", parents=[common], help="自同构群的阶、轨道与生成元")
    _add_graph_source(group)
    group.add_argument("--colors", type=parse_int_list, help="只计算保持该着色的自同构")

    check_coloring = sub.add_parser("check-coloring", parents=[common], help="检查着色是否区分")
    _add_graph_source(check_coloring)
    check_coloring.add_argument("--coloring", type=parse_int_list, required=True, help="按顶点顺序的颜色，如 0,1,2,2,2")

    check_set = sub.add_parser("check-set", parents=[common], help="检查判定集 / 集合区分")
    _add_graph_source(check_set)
    check_set.add_argument("--set", dest="points", type=parse_token_list, required=True,
                           help="顶点编号或标签，如 000,010,110")
    check_set.add_argument("--set-colors", type=parse_int_list, help="与 --set 一一对应的颜色")

    table = sub.add_parser("table", parents=[common], help="渲染闭式公式表格")
    table.add_argument("--family", required=True, help="book 或 product")
    table.add_argument("--m", type=parse_int_range, required=True)
    table.add_argument("--n", type=parse_int_range, default=[])
    table.add_argument("--params", type=parse_token_list, help="列，如 det,dist,fdist")
    table.add_argument("--format", choices=["csv", "markdown"], default="csv")

    verify = sub.add_parser("verify-books", parents=[common], help="书图公式与穷举逐格比对")
    verify.add_argument("--m", type=parse_int_range, required=True)
    verify.add_argument("--n", type=parse_int_range, required=True)
    verify.add_argument("--format", choices=["json", "csv"], default="json")
    _add_search_flags(verify)
    return parser


# ========== 输出 ==========

@lru_cache(maxsize=1)
def load_output_schema() -> Dict[str, Any]:
    with open(FRAMEWORK_ROOT / OUTPUT_SCHEMA_PATH, "r", encoding="utf-8") as f:
        return json.load(f)


def render_json(document: Dict[str, Any]) -> str:
    jsonschema.validate(instance=document, schema=load_output_schema())
    return json.dumps(document, ensure_ascii=False, indent=2) + "\n"


def _verify_csv(report: Dict[str, Any]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(VERIFY_CSV_COLUMNS)
    for cell in report["cells"]:
        formula = cell["formula"]
        formula_text = (
            str(formula["value"]) if formula["kind"] == "exact"
            else f"[{formula['lower']}, {formula['upper_exclusive']})"
        )
        writer.writerow([
            cell["m"], cell["n"], "" if cell["d"] is None else cell["d"], cell["param"], formula_text,
            "" if cell["oracle"] is None else cell["oracle"],
            "" if cell["match"] is None else str(cell["match"]).lower(), cell["status"],
        ])
    return buffer.getvalue()


# ========== 子命令 ==========

def _call(name: str, **kwargs) -> Dict[str, Any]:
    result = get_registry().call(name, **kwargs)
    if not result.get("success", False):
        raise CommandFailed(result)
    return result


def _source(args: argparse.Namespace) -> Dict[str, str]:
    if args.family:
        return {"family": args.family}
    if args.graph6:
        return {"graph6": args.graph6}
    if args.input == "-":
        return {"text": sys.stdin.read()}
    return {"path": args.input}


def _strip(result: Dict[str, Any]) -> Dict[str, Any]:
    return {k: v for k, v in result.items() if k != "success"}


def cmd_analyze(args: argparse.Namespace) -> Tuple[int, str]:
    result = _call(
        "sym_params.full_report",
        source=_source(args),
        budget=args.budget,
        jobs=args.jobs,
        include_witnesses=False if args.no_witness else None,
        config_file=args.config,
    )
    return (EXIT_BUDGET if result["partial"] else EXIT_OK), render_json(result["report"])


def cmd_family(args: argparse.Namespace) -> Tuple[int, str]:
    if args.format != "json":
        return EXIT_OK, _call("graph_core.emit", source=_source(args), fmt=args.format)["text"]
    return EXIT_OK, render_json(_strip(_call("graph_core.describe", source=_source(args))))


def cmd_group(args: argparse.Namespace) -> Tuple[int, str]:
    result = _call("aut_search.automorphism_group", source=_source(args), colors=args.colors)
    return EXIT_OK, render_json(_strip(result))


def cmd_check_coloring(args: argparse.Namespace) -> Tuple[int, str]:
    result = _call("sym_params.check_coloring", source=_source(args), coloring=args.coloring)
    return EXIT_OK, render_json(_strip(result))


def cmd_check_set(args: argparse.Namespace) -> Tuple[int, str]:
    result = _call("sym_params.check_set", source=_source(args), points=args.points, set_colors=args.set_colors)
    return EXIT_OK, render_json(_strip(result))


def cmd_table(args: argparse.Namespace) -> Tuple[int, str]:
    family = args.family.split(":", 1)[0]
    result = _call("tables.render", family=family, m_values=args.m, n_values=args.n,
                   params=args.params, fmt=args.format)
    return EXIT_OK, result["text"]


def cmd_verify_books(args: argparse.Namespace) -> Tuple[int, str]:
    report = _call("verify_books.run", m_values=args.m, n_values=args.n,
                   budget=args.budget, jobs=args.jobs)["report"]
    code = EXIT_OK if report["passed"] else EXIT_INTERNAL
    if args.format == "csv":
        return code, _verify_csv(report)
    return code, render_json(report)


COMMANDS: Dict[str, Callable[[argparse.Namespace], Tuple[int, str]]] = {
    "analyze": cmd_analyze,
    "family": cmd_family,
    "group": cmd_group,
    "check-coloring": cmd_check_coloring,
    "check-set": cmd_check_set,
    "table": cmd_table,
    "verify-books": cmd_verify_books,
}


def _write(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        logger.info(f"✓ 结果已写入 {output}")
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    get_service_manager().load_project_modules()
    try:
        code, text = COMMANDS[args.command](args)
    except CommandFailed as e:
        print(f"❌ {e.error}: {e}", file=sys.stderr)
        return e.exit_code
    except jsonschema.ValidationError as e:
        logger.error(f"❌ 输出未通过 Schema 校验: {e.message}")
        return EXIT_INTERNAL

    try:
        _write(text, args.output)
    except OSError as e:
        print(f"❌ 无法写入输出文件: {e}", file=sys.stderr)
        return EXIT_INPUT
    return code
