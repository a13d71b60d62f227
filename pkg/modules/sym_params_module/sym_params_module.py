"""
对称性破缺参数模块 (Symmetry-Breaking Parameters Module)

通过对着色/子集的穷举搜索精确计算 dist、det、ρ^d、R^d、ρ_d、ρ^u、ρ^ℓ、fdist
以及集合区分相关参数。Aut(G) 只计算一次，随后所有判定都走 SymmetryOracle；
输出前的见证一律用 aut-search / 逐点稳定子独立复核。

着色约定：ρ^d 与区分着色不要求用满 d 种颜色；代价数 ρ_d 要求 d 个颜色类全部非空。
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Any, Dict, Hashable, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from modules.aut_search_module import automorphism_group
from modules.graph_core_module import DomainError, Graph
from modules.permgroup_module import Permutation, PermutationGroup, pointwise_stabilizer

from .coloring_search import (
    BudgetExceededError,
    BudgetMeter,
    canonical_colorings,
    coloring_count,
    estimate_candidates,
    first_success,
)
from .search_config import SearchConfig, load_search_config
from .variables import ANALYZER_CACHE_SIZE, REPORT_SCHEMA_VERSION

logger = logging.getLogger(__name__)


class SearchResult(NamedTuple):
    """(数值, 见证)；见证是着色或升序顶点集"""
    value: int
    witness: Tuple[int, ...]


def _result(value: int, witness: Sequence[int]) -> SearchResult:
    return SearchResult(value, tuple(witness))


class SymmetryOracle:
    """
    固定群上的快速判定。阶不超过 table_cap 时展开元素表：
    着色判定逐个检查轮换是否单色，判定集判定检查是否与每个极小支撑相交；
    更大的群改用稳定链上的按标签回溯。
    """

    def __init__(self, group: PermutationGroup, table_cap: int):
        self.group = group
        self.degree = group.degree
        self.tabulated = group.order() <= table_cap
        self._elements: List[Permutation] = []
        self._cycles: List[List[Tuple[int, ...]]] = []
        self._minimal_supports: List[int] = []
        if self.tabulated and not group.is_trivial():
            self._tabulate()

    def _tabulate(self) -> None:
        elements = [g for g in self.group.iter_elements() if not g.is_identity()]
        elements.sort(key=lambda g: (len(g.support()), g.images))
        self._elements = elements
        self._cycles = [g.cycles() for g in elements]
        for g in elements:
            mask = sum(1 << v for v in g.support())
            if not any(mask & kept == kept for kept in self._minimal_supports):
                self._minimal_supports.append(mask)
        logger.debug(f"✓ 元素表: {len(elements)} 个非平凡元素, 极小支撑 {len(self._minimal_supports)} 个")

    def preserving_element(self, labels: Sequence[Hashable]) -> Optional[Permutation]:
        """保持 labels 的非平凡元素；不存在时返回 None"""
        if self.group.is_trivial():
            return None
        if not self.tabulated:
            return self.group.find_label_preserving(labels)
        for g, cycles in zip(self._elements, self._cycles):
            if all(all(labels[v] == labels[cycle[0]] for v in cycle) for cycle in cycles):
                return g
        return None

    def moving_preserving_element(self, labels: Sequence[Hashable], points: Iterable[int]) -> Optional[Permutation]:
        """保持 labels 且移动 points 中某点的元素"""
        targets = set(points)
        if self.group.is_trivial() or not targets:
            return None
        if not self.tabulated:
            for g in self.group.label_stabilizer(labels).generators:
                if any(g.images[v] != v for v in targets):
                    return g
            return None
        for g, cycles in zip(self._elements, self._cycles):
            if any(g.images[v] != v for v in targets) and \
                    all(all(labels[v] == labels[cycle[0]] for v in cycle) for cycle in cycles):
                return g
        return None

    def is_distinguishing(self, coloring: Sequence[int]) -> bool:
        return self.preserving_element(coloring) is None

    def is_determining(self, points: Iterable[int]) -> bool:
        chosen = set(points)
        if self.group.is_trivial():
            return True
        if self.tabulated:
            mask = sum(1 << v for v in chosen)
            return all(mask & support for support in self._minimal_supports)
        labels = [v if v in chosen else -1 for v in range(self.degree)]
        return self.group.find_label_preserving(labels) is None


@dataclass
class ParamReport:
    """参数汇总；skipped 记录因预算被跳过的字段"""
    vertex_count: int
    dist: Optional[int] = None
    det: Optional[int] = None
    paint_cost: Dict[int, int] = field(default_factory=dict)
    upper_paint: Optional[int] = None
    lower_paint: Optional[int] = None
    fdist: Optional[int] = None
    witnesses: Dict[str, Any] = field(default_factory=dict)
    skipped: List[str] = field(default_factory=list)
    name: str = ""
    vertex_labels: Optional[List[str]] = None

    @property
    def partial(self) -> bool:
        return bool(self.skipped)

    def to_dict(self, include_witnesses: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "kind": "param_report",
            "schema_version": REPORT_SCHEMA_VERSION,
            "graph": self.name,
            "vertex_count": self.vertex_count,
            "dist": self.dist,
            "det": self.det,
            "paint_cost": {str(d): rho for d, rho in sorted(self.paint_cost.items())},
            "upper_paint": self.upper_paint,
            "lower_paint": self.lower_paint,
            "fdist": self.fdist,
            "partial": self.partial,
            "skipped": list(self.skipped),
        }
        if include_witnesses:
            data["witnesses"] = self.witnesses
            if self.vertex_labels is not None:
                data["vertex_labels"] = list(self.vertex_labels)
        return data


class SymmetryAnalyzer:
    """单个图的参数计算器，缓存 Aut(G)、dist、det 与各 d 的 R^d"""

    def __init__(self, graph: Graph, config: Optional[SearchConfig] = None):
        if graph.vertex_count == 0:
            raise DomainError("对称性参数要求非空图")
        self.graph = graph
        self.config = config or load_search_config()
        self.n = graph.vertex_count
        self._group: Optional[PermutationGroup] = None
        self._oracle: Optional[SymmetryOracle] = None
        self._max_class: Dict[int, SearchResult] = {}
        self._not_distinguishable: set = set()
        self._dist: Optional[int] = None
        self._det: Optional[SearchResult] = None

    @property
    def group(self) -> PermutationGroup:
        if self._group is None:
            self._group = automorphism_group(self.graph)
            logger.debug(f"✓ |Aut({self.graph.name or 'G'})| = {self._group.order()}")
        return self._group

    @property
    def oracle(self) -> SymmetryOracle:
        if self._oracle is None:
            self._oracle = SymmetryOracle(self.group, self.config.element_table_cap)
        return self._oracle

    def _check_coloring(self, coloring: Sequence[int]) -> List[int]:
        if len(coloring) != self.n:
            raise DomainError(f"着色长度 {len(coloring)} 与顶点数 {self.n} 不一致")
        return list(coloring)

    def _check_points(self, points: Iterable[int]) -> List[int]:
        chosen = sorted(set(points))
        for v in chosen:
            if not 0 <= v < self.n:
                raise DomainError(f"顶点 {v} 超出 0..{self.n - 1}")
        return chosen

    # ========== 判定 ==========

    def preserving_automorphism(self, coloring: Sequence[int]) -> Optional[Permutation]:
        """保持着色的非平凡自同构（优先返回 Aut(G) 的生成元）"""
        coloring = self._check_coloring(coloring)
        for g in self.group.generators:
            if all(coloring[g.images[v]] == coloring[v] for v in range(self.n)):
                return g
        return self.oracle.preserving_element(coloring)

    def is_determining_set(self, points: Iterable[int]) -> bool:
        chosen = self._check_points(points)
        return pointwise_stabilizer(self.group, chosen).is_trivial()

    def fixing_automorphism(self, points: Iterable[int]) -> Optional[Permutation]:
        """逐点固定 points 的非平凡自同构"""
        chosen = self._check_points(points)
        stabilizer = pointwise_stabilizer(self.group, chosen)
        return stabilizer.generators[0] if stabilizer.generators else None

    def _set_labels(self, points: Sequence[int], colors: Mapping[int, int]) -> List[Hashable]:
        members = set(points)
        return [(1, colors[v]) if v in members else (0, 0) for v in range(self.n)]

    def set_violation(self, points: Iterable[int], colors: Mapping[int, int]) -> Optional[Permutation]:
        """setstab(S) 中保持 S 上颜色类却移动 S 中某点的元素"""
        chosen = self._check_points(points)
        missing = [v for v in chosen if v not in colors]
        if missing:
            raise DomainError(f"集合着色缺少顶点 {missing}")
        return self.oracle.moving_preserving_element(self._set_labels(chosen, colors), chosen)

    def is_set_distinguishing(self, points: Iterable[int], colors: Mapping[int, int]) -> bool:
        """在 setstab(S) 的保色子群上检验其是否逐点固定 S"""
        chosen = self._check_points(points)
        missing = [v for v in chosen if v not in colors]
        if missing:
            raise DomainError(f"集合着色缺少顶点 {missing}")
        subgroup = self.group.label_stabilizer(self._set_labels(chosen, colors))
        return all(g.images[v] == v for g in subgroup.generators for v in chosen)

    # ========== 搜索 ==========

    def max_color_class(self, d: int) -> SearchResult:
        """
        R^d 与见证着色：从 |V| - det 向下枚举候选最大类 T（字典序），
        补集须为判定集，补集用颜色 1..d-1 做规范着色，T 固定为颜色 0。
        """
        if d < 1:
            raise DomainError(f"颜色数必须 ≥ 1，收到 {d}")
        if d in self._max_class:
            return self._max_class[d]
        if d in self._not_distinguishable:
            raise DomainError(f"图不是 {d}-可区分的")

        if self.group.is_trivial():
            result = _result(self.n, [0] * self.n)
            self._max_class[d] = result
            return result
        if d == 1:
            self._not_distinguishable.add(d)
            raise DomainError("图不是 1-可区分的")

        det = self.determining_number().value
        meter = BudgetMeter(f"paint_cost[{d}]", self.config.budget)
        lowest = -(-self.n // d)
        vertices = range(self.n)
        for size in range(self.n - det, lowest - 1, -1):
            meter.charge(estimate_candidates(self.n, size, d - 1))
            logger.debug(f"🔍 R^{d}: 尝试颜色类大小 {size}")

            def check(cls: Tuple[int, ...]) -> Optional[List[int]]:
                inside = set(cls)
                rest = [v for v in vertices if v not in inside]
                if not self.oracle.is_determining(rest):
                    return None
                coloring = [0] * self.n
                for pattern in canonical_colorings(len(rest), d - 1):
                    for v, c in zip(rest, pattern):
                        coloring[v] = c + 1
                    if self.oracle.is_distinguishing(coloring):
                        return list(coloring)
                return None

            found = first_success(combinations(vertices, size), check, self.config.jobs)
            if found is not None:
                result = _result(size, found)
                self._max_class[d] = result
                return result

        self._not_distinguishable.add(d)
        raise DomainError(f"图不是 {d}-可区分的")

    def paint_cost(self, d: int) -> int:
        return self.n - self.max_color_class(d).value

    def distinguishing_number(self) -> int:
        if self._dist is None:
            if self.group.is_trivial():
                self._dist = 1
            else:
                bound = self.determining_number().value + 1
                for d in range(2, bound + 1):
                    try:
                        self.max_color_class(d)
                    except DomainError:
                        continue
                    self._dist = d
                    break
                if self._dist is None:
                    raise RuntimeError(f"在 det+1 = {bound} 种颜色内未找到区分着色")
        return self._dist

    def distinguishing_coloring(self) -> Tuple[int, ...]:
        return self.max_color_class(self.distinguishing_number()).witness

    def determining_number(self) -> SearchResult:
        """
        det 与字典序最小的最小判定集：先用轨道代表元的迭代加深求出 det，
        再按字典序扫描该大小的子集取第一个判定集（超出预算时保留加深搜索的见证）。
        """
        if self._det is not None:
            return self._det
        if self.group.is_trivial():
            self._det = _result(0, [])
            return self._det

        size, witness = 0, None
        while witness is None:
            size += 1
            witness = self._deepen(self.group, [], size)
        if comb(self.n, size) <= self.config.budget:
            lex = first_success(
                combinations(range(self.n), size),
                lambda s: s if self.oracle.is_determining(s) else None,
            )
            if lex is not None:
                witness = list(lex)
        self._det = _result(size, sorted(witness))
        return self._det

    def _deepen(self, group: PermutationGroup, chosen: List[int], limit: int) -> Optional[List[int]]:
        if group.is_trivial():
            return chosen
        if len(chosen) == limit:
            return None
        for orbit in group.orbits():
            if len(orbit) == 1:
                continue
            representative = orbit[0]
            found = self._deepen(pointwise_stabilizer(group, [representative]), chosen + [representative], limit)
            if found is not None:
                return found
        return None

    def cost_number(self, d: int) -> SearchResult:
        """ρ_d：d 个颜色类全部非空；按最小类大小 c 升序搜索"""
        if d > self.n:
            raise DomainError(f"d = {d} 超过顶点数 {self.n}，无法使每个颜色类非空")
        dist = self.distinguishing_number()
        if d < dist:
            raise DomainError(f"d = {d} 小于 dist = {dist}，图不是 {d}-可区分的")
        if d == 1:
            return _result(self.n, [0] * self.n)

        meter = BudgetMeter(f"cost_number[{d}]", self.config.budget)
        vertices = range(self.n)
        for size in range(1, self.n // d + 1):
            meter.charge(estimate_candidates(self.n, size, d - 1, exact=True))

            def check(cls: Tuple[int, ...]) -> Optional[List[int]]:
                inside = set(cls)
                rest = [v for v in vertices if v not in inside]
                if not self.oracle.is_determining(rest):
                    return None
                coloring = [0] * self.n
                for pattern in canonical_colorings(len(rest), d - 1, exact=True):
                    for v, c in zip(rest, pattern):
                        coloring[v] = c + 1
                    if self.oracle.is_distinguishing(coloring):
                        return list(coloring)
                return None

            found = first_success(combinations(vertices, size), check, self.config.jobs)
            if found is not None:
                return _result(size, found)
        raise RuntimeError(f"未找到满射的 {d}-区分着色（d ≥ dist 时不应发生）")

    def upper_paint_cost(self) -> int:
        return self.paint_cost(self.distinguishing_number())

    def lower_paint_cost(self) -> int:
        return self.determining_number().value

    def frugal_distinguishing_number(self) -> int:
        det = self.determining_number().value
        for d in range(self.distinguishing_number(), det + 2):
            if self.paint_cost(d) == det:
                return d
        raise RuntimeError(f"ρ^{det + 1} ≠ det = {det}，违反 ρ^(det+1) = det")

    def set_distinguishing_number(self, points: Iterable[int]) -> SearchResult:
        """区分集合 S 所需的最少颜色数与见证（按 S 的升序给出颜色）"""
        chosen = self._check_points(points)
        if not chosen:
            return _result(0, [])
        meter = BudgetMeter("set_distinguishing_number", self.config.budget)
        for k in range(1, len(chosen) + 1):
            meter.charge(coloring_count(len(chosen), k, exact=True))
            for pattern in canonical_colorings(len(chosen), k, exact=True):
                colors = dict(zip(chosen, pattern))
                if self.oracle.moving_preserving_element(self._set_labels(chosen, colors), chosen) is None:
                    return _result(k, pattern)
        raise RuntimeError("全不同颜色总能区分集合，不应到达此处")

    def fdist_by_set_distinguishing(self) -> int:
        """1 + 各最小判定集集合区分数的最小值"""
        det = self.determining_number().value
        if det == 0:
            return 1
        meter = BudgetMeter("fdist_by_set_distinguishing", self.config.budget)
        meter.charge(comb(self.n, det))
        best = None
        for subset in combinations(range(self.n), det):
            if not self.oracle.is_determining(subset):
                continue
            k = self.set_distinguishing_number(subset).value
            best = k if best is None else min(best, k)
            if best == 1:
                break
        return 1 + best

    # ========== 汇总 ==========

    def _verify_coloring(self, coloring: Sequence[int]) -> None:
        if not automorphism_group(self.graph, coloring).is_trivial():
            raise RuntimeError(f"见证着色复核失败: {list(coloring)}")
        if not class_complements_are_determining(self.graph, coloring, self):
            raise RuntimeError(f"见证着色的颜色类补集不是判定集: {list(coloring)}")

    def full_report(self) -> ParamReport:
        graph = self.graph
        report = ParamReport(
            vertex_count=self.n,
            name=graph.name,
            vertex_labels=list(graph.labels) if graph.labels is not None else None,
        )

        det_result = self.determining_number()
        if not self.is_determining_set(det_result.witness):
            raise RuntimeError(f"最小判定集复核失败: {list(det_result.witness)}")
        report.det = det_result.value
        report.lower_paint = det_result.value
        report.witnesses["det"] = list(det_result.witness)

        try:
            report.dist = self.distinguishing_number()
        except BudgetExceededError as e:
            logger.warning(f"⚠️ 跳过 dist 及依赖字段: {e}")
            report.skipped.extend(["dist", "paint_cost", "upper_paint", "fdist"])
            return report

        colorings: Dict[str, List[int]] = {}
        d = report.dist
        while True:
            try:
                result = self.max_color_class(d)
            except BudgetExceededError as e:
                logger.warning(f"⚠️ 跳过 ρ^{d} 及之后字段: {e}")
                report.skipped.append(f"paint_cost[{d}]")
                if report.upper_paint is None:
                    report.skipped.append("upper_paint")
                report.skipped.append("fdist")
                break
            self._verify_coloring(result.witness)
            report.paint_cost[d] = self.n - result.value
            colorings[str(d)] = list(result.witness)
            if d == report.dist:
                report.upper_paint = report.paint_cost[d]
            if report.paint_cost[d] == report.det:
                report.fdist = d
                break
            if d >= report.det + 1:
                raise RuntimeError(f"ρ^{d} 仍大于 det，违反 ρ^(det+1) = det")
            d += 1

        report.witnesses["dist"] = colorings.get(str(report.dist))
        report.witnesses["paint_cost"] = colorings
        report.witnesses["fdist"] = colorings.get(str(report.fdist)) if report.fdist is not None else None
        return report


@lru_cache(maxsize=ANALYZER_CACHE_SIZE)
def _cached_analyzer(graph: Graph, config: SearchConfig) -> SymmetryAnalyzer:
    return SymmetryAnalyzer(graph, config)


def get_analyzer(graph: Graph, config: Optional[SearchConfig] = None) -> SymmetryAnalyzer:
    """
    按 (图, 配置) 缓存的分析器，最多保留 ANALYZER_CACHE_SIZE 个（LRU）。
    未给配置时每次调用都重新加载配置，SYMBREAK_BUDGET 的变化会得到新的分析器。
    """
    return _cached_analyzer(graph, config if config is not None else load_search_config())


def clear_analyzer_cache() -> None:
    """丢弃全部缓存的分析器（及其 Aut(G)、dist、det 与 R^d）"""
    _cached_analyzer.cache_clear()


# ========== 模块级操作 ==========

def is_distinguishing(graph: Graph, coloring: Sequence[int]) -> bool:
    """只有恒等自同构保持各颜色类（直接用 aut-search 判定）"""
    if len(coloring) != graph.vertex_count:
        raise DomainError(f"着色长度 {len(coloring)} 与顶点数 {graph.vertex_count} 不一致")
    return automorphism_group(graph, coloring).is_trivial()


def distinguishing_number(graph: Graph, config: Optional[SearchConfig] = None) -> int:
    return get_analyzer(graph, config).distinguishing_number()


def is_determining_set(graph: Graph, points: Iterable[int]) -> bool:
    return get_analyzer(graph).is_determining_set(points)


def determining_number(graph: Graph, config: Optional[SearchConfig] = None) -> SearchResult:
    return get_analyzer(graph, config).determining_number()


def max_color_class(graph: Graph, d: int, config: Optional[SearchConfig] = None) -> SearchResult:
    return get_analyzer(graph, config).max_color_class(d)


def paint_cost(graph: Graph, d: int, config: Optional[SearchConfig] = None) -> int:
    return get_analyzer(graph, config).paint_cost(d)


def cost_number(graph: Graph, d: int, config: Optional[SearchConfig] = None) -> int:
    return get_analyzer(graph, config).cost_number(d).value


def upper_paint_cost(graph: Graph, config: Optional[SearchConfig] = None) -> int:
    return get_analyzer(graph, config).upper_paint_cost()


def lower_paint_cost(graph: Graph, config: Optional[SearchConfig] = None) -> int:
    return get_analyzer(graph, config).lower_paint_cost()


def frugal_distinguishing_number(graph: Graph, config: Optional[SearchConfig] = None) -> int:
    return get_analyzer(graph, config).frugal_distinguishing_number()


def is_set_distinguishing(graph: Graph, points: Iterable[int], colors: Mapping[int, int]) -> bool:
    return get_analyzer(graph).is_set_distinguishing(points, colors)


def set_distinguishing_number(graph: Graph, points: Iterable[int], config: Optional[SearchConfig] = None) -> int:
    return get_analyzer(graph, config).set_distinguishing_number(points).value


def fdist_by_set_distinguishing(graph: Graph, config: Optional[SearchConfig] = None) -> int:
    return get_analyzer(graph, config).fdist_by_set_distinguishing()


def determining_set_coloring(graph: Graph, points: Iterable[int]) -> List[int]:
    """S 中每个顶点各用一种颜色 1..|S|，其余顶点共用颜色 0"""
    coloring = [0] * graph.vertex_count
    for color, v in enumerate(sorted(set(points)), start=1):
        coloring[v] = color
    return coloring


def class_complements_are_determining(graph: Graph, coloring: Sequence[int],
                                      analyzer: Optional[SymmetryAnalyzer] = None) -> bool:
    """每个颜色类的补集都是判定集"""
    analyzer = analyzer or get_analyzer(graph)
    for color in sorted(set(coloring)):
        rest = [v for v, c in enumerate(coloring) if c != color]
        if not analyzer.is_determining_set(rest):
            return False
    return True


def full_report(graph: Graph, config: Optional[SearchConfig] = None) -> ParamReport:
    return get_analyzer(graph, config).full_report()
