"""
公式表格工作流：把书图 / 积图的闭式参数渲染成 CSV 或 Markdown。
大整数原样输出；与算例记录不一致的值以脚注标注。
"""

import csv
import io
import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence

from core.api_registry import register_workflow
from modules.closed_forms_module import Exact, book_params, product_params
from modules.graph_core_module import DomainError

logger = logging.getLogger(__name__)

BOOK_PARAMETERS = ("vertex_count", "edge_count", "dist", "det", "fdist", "upper_paint", "lower_paint")
PRODUCT_PARAMETERS = ("q", "dist", "paint2", "det", "fdist")
DEFAULT_PARAMETERS = {
    "book": ("det", "dist", "fdist", "upper_paint"),
    "product": ("dist", "paint2", "det", "fdist"),
}
TABLE_FORMATS = ("csv", "markdown")


class UnsupportedFamilyError(ValueError):
    """没有闭式公式的图族"""


def _render_value(value: Any) -> str:
    if isinstance(value, dict):
        if value["kind"] == "exact":
            return str(value["value"])
        return f"[{value['lower']}, {value['upper_exclusive']})"
    return str(value)


class TableWorkflow:

    def book_rows(self, m_values: Iterable[int], n_values: Sequence[int],
                  params: Sequence[str]) -> List[Dict[str, Any]]:
        rows = []
        for m in m_values:
            for n in n_values:
                record = book_params(m, n)
                data = record.to_dict()
                values = {
                    "vertex_count": data["vertex_count"],
                    "edge_count": data["edge_count"],
                    "dist": data["dist"],
                    "det": data["det"],
                    "fdist": data["fdist"],
                    "upper_paint": data["paint_cost"],
                    "lower_paint": data["det"],
                }
                notes = {x.field: x for x in record.discrepancies}
                rows.append({
                    "key": {"m": m, "n": n},
                    "values": {p: values[p] for p in params},
                    "notes": {p: notes[p] for p in params if p in notes},
                })
        return rows

    def product_rows(self, m_values: Iterable[int], params: Sequence[str]) -> List[Dict[str, Any]]:
        rows = []
        for m in m_values:
            values = {"q": 2 ** m, **product_params(m).to_dict()}
            rows.append({"key": {"m": m}, "values": {p: values[p] for p in params}, "notes": {}})
        return rows

    def render(self, family: str, m_values: Iterable[int], n_values: Optional[Sequence[int]] = None,
               params: Optional[Sequence[str]] = None, fmt: str = "csv") -> str:
        if family not in DEFAULT_PARAMETERS:
            raise UnsupportedFamilyError(f"图族 '{family}' 没有闭式公式，只支持 book 与 product")
        if fmt not in TABLE_FORMATS:
            raise DomainError(f"未知的表格格式 '{fmt}'")
        allowed = BOOK_PARAMETERS if family == "book" else PRODUCT_PARAMETERS
        params = tuple(params) if params else DEFAULT_PARAMETERS[family]
        unknown = [p for p in params if p not in allowed]
        if unknown:
            raise DomainError(f"图族 '{family}' 不支持参数 {unknown}，可选: {', '.join(allowed)}")

        if family == "book":
            if not n_values:
                raise DomainError("书图表格需要 n 的取值")
            rows = self.book_rows(m_values, list(n_values), params)
        else:
            rows = self.product_rows(m_values, params)
        logger.debug(f"✓ {family} 表格: {len(rows)} 行")
        if fmt == "csv":
            return self._to_csv(rows, params)
        return self._to_markdown(rows, params)

    @staticmethod
    def _header(rows: List[Dict[str, Any]], params: Sequence[str]) -> List[str]:
        keys = list(rows[0]["key"]) if rows else []
        return keys + list(params)

    def _to_csv(self, rows: List[Dict[str, Any]], params: Sequence[str]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self._header(rows, params) + ["notes"])
        for row in rows:
            notes = "; ".join(
                f"{p}: 算例为 {x.worked_example}" + (f"（{x.note}）" if x.note else "")
                for p, x in row["notes"].items()
            )
            writer.writerow(
                [str(v) for v in row["key"].values()]
                + [_render_value(row["values"][p]) for p in params]
                + [notes]
            )
        return buffer.getvalue()

    def _to_markdown(self, rows: List[Dict[str, Any]], params: Sequence[str]) -> str:
        header = self._header(rows, params)
        lines = [
            "| " + " | ".join(header) + " |",
            "|" + "|".join("---" for _ in header) + "|",
        ]
        footnotes: List[str] = []
        for row in rows:
            cells = [str(v) for v in row["key"].values()]
            for p in params:
                text = _render_value(row["values"][p])
                if p in row["notes"]:
                    x = row["notes"][p]
                    footnotes.append(
                        f"[^{len(footnotes) + 1}]: {p}: 算例为 {x.worked_example}" + (f"，{x.note}" if x.note else "")
                    )
                    text += f"[^{len(footnotes)}]"
                cells.append(text)
            lines.append("| " + " | ".join(cells) + " |")
        if footnotes:
            lines.append("")
            lines.extend(footnotes)
        return "\n".join(lines) + "\n"


@register_workflow("tables")
def render_table(family: str, m_values: Iterable[int], n_values: Optional[Sequence[int]] = None,
                 params: Optional[Sequence[str]] = None, fmt: str = "csv") -> str:
    return TableWorkflow().render(family, m_values, n_values, params, fmt)
