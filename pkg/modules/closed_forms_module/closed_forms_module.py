"""
闭式公式模块 (Closed Forms Module)

书图 B_{m,n}（含 m = 3 的退化情形）与 K_{2^m}□H 的参数公式、
ρ^u 的两组推论界、构造性的最优着色，以及积图的纤维模式区分判定。
全部使用 Python 大整数，不做浮点开方。
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from modules.aut_search_module import is_asymmetric
from modules.graph_core_module import DomainError, Graph

from .variables import (
    BOUND_SOURCE_BROAD,
    BOUND_SOURCE_REFINED,
    DISCREPANCY_NOTES,
    ORDERS_WITHOUT_ASYMMETRIC_GRAPH,
    WITNESS_PATTERN_LIMIT,
    WORKED_EXAMPLE_VALUES,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Exact:
    value: int

    def contains(self, x: int) -> bool:
        return x == self.value

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "exact", "value": self.value}


@dataclass(frozen=True)
class Interval:
    """lower ≤ x < upper_exclusive"""
    lower: int
    upper_exclusive: int

    def contains(self, x: int) -> bool:
        return self.lower <= x < self.upper_exclusive

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "interval", "lower": self.lower, "upper_exclusive": self.upper_exclusive}


PaintCostResult = Union[Exact, Interval]


@dataclass(frozen=True)
class Discrepancy:
    """输出值与算例记录值不一致时的标注"""
    field: str
    emitted: int
    worked_example: int
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "field": self.field,
            "emitted": self.emitted,
            "worked_example": self.worked_example,
            "note": self.note,
        }


@dataclass(frozen=True)
class BookParams:
    m: int
    n: int
    d: int
    vertex_count: int
    edge_count: int
    det: int
    dist: int
    fdist: int
    paint_cost_result: PaintCostResult
    discrepancies: Tuple[Discrepancy, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "n": self.n,
            "d": self.d,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "det": self.det,
            "dist": self.dist,
            "fdist": self.fdist,
            "paint_cost": self.paint_cost_result.to_dict(),
            "discrepancies": [x.to_dict() for x in self.discrepancies],
        }


@dataclass(frozen=True)
class BoundPair:
    """lower ≤ ρ^u < upper_exclusive，各自标明来源推论"""
    lower: int
    lower_source: str
    upper_exclusive: int
    upper_source: str
    annotations: Tuple[str, ...] = field(default=())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lower": self.lower,
            "lower_source": self.lower_source,
            "upper_exclusive": self.upper_exclusive,
            "upper_source": self.upper_source,
            "annotations": list(self.annotations),
        }


@dataclass(frozen=True)
class ProductParams:
    m: int
    dist: int
    paint2: int
    det: int
    fdist: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.dist, self.paint2, self.det, self.fdist)

    def to_dict(self) -> Dict[str, Any]:
        return {"m": self.m, "dist": self.dist, "paint2": self.paint2, "det": self.det, "fdist": self.fdist}


# ========== 基础算术 ==========

def integer_root_ceil(n: int, e: int) -> int:
    """满足 k^e ≥ n 的最小正整数 k（二分查找，精确整数）"""
    if n < 1 or e < 1:
        raise DomainError(f"integer_root_ceil 要求 n ≥ 1, e ≥ 1，收到 n={n}, e={e}")
    lo, hi = 1, 1
    while hi ** e < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** e >= n:
            hi = mid
        else:
            lo = mid + 1
    return lo


def _check_book(m: int, n: int) -> None:
    if m < 3:
        raise DomainError(f"书图要求 m ≥ 3，收到 m={m}")
    if n < 2:
        raise DomainError(f"书图公式要求 n ≥ 2（B_{{m,1}} = C_m 不在讨论范围），收到 n={n}")


def _check_j(m: int, j: int) -> None:
    if not 0 <= j <= m - 2:
        raise DomainError(f"j = {j} 超出 0..{m - 2}")


# ========== 书图 ==========

def book_vertex_count(m: int, n: int) -> int:
    return 2 + n * (m - 2)


def book_edge_count(m: int, n: int) -> int:
    return 1 + n * (m - 1)


def book_det(m: int, n: int) -> int:
    _check_book(m, n)
    return n if m == 3 else n - 1


def book_dist(m: int, n: int) -> int:
    """m ≥ 4 时为满足 (k-1)^{m-2} < n ≤ k^{m-2} 的 k；m = 3 时为 n"""
    _check_book(m, n)
    if m == 3:
        return n
    return integer_root_ceil(n, m - 2)


def book_fdist(m: int, n: int) -> int:
    _check_book(m, n)
    if m == 3:
        return n
    return 2 + (n - 1) // (m - 2)


def book_nj(m: int, d: int, j: int) -> int:
    """至多 j 个非红顶点的 d-路径着色数"""
    _check_j(m, j)
    e = m - 2
    return sum(comb(e, i) * (d - 1) ** i for i in range(j + 1))


def book_Nj(m: int, d: int, j: int) -> int:
    """上述路径着色中红色顶点的总数"""
    _check_j(m, j)
    e = m - 2
    return sum((e - i) * comb(e, i) * (d - 1) ** i for i in range(j + 1))


def _small_n_level(m: int, n: int, d: int) -> int:
    """满足 n ≤ n^d_j 的最小 j"""
    for j in range(m - 1):
        if n <= book_nj(m, d, j):
            return j
    raise DomainError(f"n = {n} 超过 d^{{m-2}} = {d ** (m - 2)}")


def book_paint_cost(m: int, n: int, d: int) -> PaintCostResult:
    """
    ρ^d(B_{m,n})。n 在大 n 区间时给出精确值；小 n 区间内 n 恰为某个 n^d_j 时也精确
    （只有一个书脊顶点着红），否则给出区间 [|V|-N^d_j-1, |V|-N^d_{j-1}-1)。
    """
    _check_book(m, n)
    dist = book_dist(m, n)
    if d < dist:
        raise DomainError(f"d = {d} 小于 dist(B_{{{m},{n}}}) = {dist}，图不是 {d}-可区分的")
    if m == 3:
        return Exact(n)

    e = m - 2
    top = d ** e
    low = top - (d - 1) ** e
    if low < n < top:
        return Exact(e * (n - d ** (e - 1)))
    if n == low or n == top:
        return Exact(e * (n - d ** (e - 1)) + 1)

    vertices = book_vertex_count(m, n)
    j = _small_n_level(m, n, d)
    if n == book_nj(m, d, j):
        return Exact(vertices - book_Nj(m, d, j) - 1)
    return Interval(vertices - book_Nj(m, d, j) - 1, vertices - book_Nj(m, d, j - 1) - 1)


def book_upper_paint_cost(m: int, n: int) -> PaintCostResult:
    return book_paint_cost(m, n, book_dist(m, n))


def book_upper_paint_bounds(m: int, n: int) -> BoundPair:
    """
    两组推论界取较紧者（相等时取 broad）。refined 界只在小 n 区间适用；
    定理给出的精确值落在界外时附加标注。
    """
    _check_book(m, n)
    if m < 4:
        raise DomainError(f"ρ^u 的推论界要求 m ≥ 4，收到 m={m}")
    k = book_dist(m, n)
    e = m - 2
    vertices = book_vertex_count(m, n)

    lower, lower_source = e * (n - k ** (e - 1)) + 1, BOUND_SOURCE_BROAD
    upper, upper_source = e * (n - (k - 1) ** (e - 1)) + 1, BOUND_SOURCE_BROAD

    if n < k ** e - (k - 1) ** e:
        j = _small_n_level(m, n, k)
        refined_lower = vertices - book_Nj(m, k, j) - 1
        refined_upper = vertices - book_Nj(m, k, j - 1) - 1
        if refined_lower > lower:
            lower, lower_source = refined_lower, BOUND_SOURCE_REFINED
        if refined_upper < upper:
            upper, upper_source = refined_upper, BOUND_SOURCE_REFINED

    annotations: List[str] = []
    theorem = book_paint_cost(m, n, k)
    if isinstance(theorem, Exact) and not lower <= theorem.value < upper:
        annotations.append(
            f"定理给出 ρ^u = {theorem.value}，不在推论界 [{lower}, {upper}) 内"
        )
    return BoundPair(lower, lower_source, upper, upper_source, tuple(annotations))


def worked_example_discrepancies(kind: str, key: Tuple[int, ...], values: Dict[str, int]) -> List[Discrepancy]:
    """与记录的算例数值比对，返回不一致字段的标注"""
    recorded = WORKED_EXAMPLE_VALUES.get((kind, tuple(key)), {})
    found = []
    for name in sorted(recorded):
        if name in values and values[name] != recorded[name]:
            note = DISCREPANCY_NOTES.get((kind, tuple(key), name), "")
            found.append(Discrepancy(name, values[name], recorded[name], note))
    return found


def book_params(m: int, n: int, d: Optional[int] = None) -> BookParams:
    _check_book(m, n)
    dist = book_dist(m, n)
    d = dist if d is None else d
    result = book_paint_cost(m, n, d)
    values = {
        "vertex_count": book_vertex_count(m, n),
        "dist": dist,
        "det": book_det(m, n),
        "fdist": book_fdist(m, n),
    }
    if d == dist and isinstance(result, Exact):
        values["upper_paint"] = result.value
    discrepancies = worked_example_discrepancies("book", (m, n), values)
    for x in discrepancies:
        logger.info(f"⚠️ B_{{{m},{n}}} 的 {x.field}: 输出 {x.emitted}，算例为 {x.worked_example}")
    return BookParams(
        m=m, n=n, d=d,
        vertex_count=values["vertex_count"],
        edge_count=book_edge_count(m, n),
        det=values["det"],
        dist=dist,
        fdist=values["fdist"],
        paint_cost_result=result,
        discrepancies=tuple(discrepancies),
    )


def book_witness_coloring(m: int, n: int, d: int) -> List[int]:
    """
    构造 B_{m,n} 的 d-区分着色（颜色 0 为红色，取最大红色类）：
    路径着色按非红顶点数、再按字典序取前 n 个分给各页；
    若所选集合可以做到在反转下不封闭，则两个书脊顶点都着红，否则 v_{m-1} 着颜色 1。
    顶点编号与 make_book 一致。
    """
    _check_book(m, n)
    if m < 4:
        raise DomainError("构造性着色要求 m ≥ 4")
    if d < book_dist(m, n):
        raise DomainError(f"d = {d} 小于 dist(B_{{{m},{n}}})")
    e = m - 2
    if d ** e > WITNESS_PATTERN_LIMIT:
        raise DomainError(f"路径着色数 {d ** e} 超过构造上限 {WITNESS_PATTERN_LIMIT}")

    def nonred(p: Tuple[int, ...]) -> int:
        return sum(1 for c in p if c)

    patterns = sorted(product(range(d), repeat=e), key=lambda p: (nonred(p), p))
    chosen = patterns[:n]
    level = nonred(chosen[-1])
    in_level = [p for p in chosen if nonred(p) == level]
    spare = [p for p in patterns if nonred(p) == level and p not in set(chosen)]

    def closed(selection: Sequence[Tuple[int, ...]]) -> bool:
        members = set(selection)
        return all(p[::-1] in members for p in selection)

    if closed(chosen) and spare:
        swap: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None
        asymmetric = [p for p in in_level if p[::-1] != p]
        if asymmetric:
            swap = (asymmetric[0][::-1], spare[0])
        else:
            outside = [p for p in spare if p[::-1] != p]
            if outside:
                swap = (in_level[-1], outside[0])
        if swap is not None:
            chosen = [swap[1] if p == swap[0] else p for p in chosen]

    coloring = [0] * book_vertex_count(m, n)
    if closed(chosen):
        coloring[1] = 1
    for i, pattern in enumerate(chosen):
        for j, c in enumerate(pattern):
            coloring[2 + i * e + j] = c
    return coloring


# ========== 积图 K_{2^m}□H ==========

def product_params(m: int) -> ProductParams:
    if m < 1:
        raise DomainError(f"m 必须 ≥ 1，收到 {m}")
    if m in ORDERS_WITHOUT_ASYMMETRIC_GRAPH:
        raise DomainError(f"不存在 {m} 个顶点的非对称图")
    q = 2 ** m
    return ProductParams(
        m=m,
        dist=2,
        paint2=m * 2 ** (m - 1),
        det=q - 1,
        fdist=-(-(q - 1) // m) + 1,
    )


def _check_asymmetric(h: Graph) -> None:
    if not is_asymmetric(h):
        raise DomainError(f"H = {h.name or 'H'} 不是非对称图")


def product_is_distinguishing(q: int, h: Graph, coloring: Sequence[int]) -> bool:
    """K_q□H 的自同构整体置换 H-纤维，故着色可区分当且仅当各纤维的颜色模式两两不同"""
    _check_asymmetric(h)
    size = h.vertex_count
    if len(coloring) != q * size:
        raise DomainError(f"着色长度 {len(coloring)} 与 |K_{q}□H| = {q * size} 不一致")
    patterns = {tuple(coloring[z * size:(z + 1) * size]) for z in range(q)}
    return len(patterns) == q


def product_frugal_witness(q: int, h: Graph) -> Tuple[List[int], List[int]]:
    """
    最小判定集：前 q-1 条 H-纤维各取一个顶点，位置依次轮转以均匀分布在 K-纤维上；
    同一 K-纤维中的选点用不同颜色 1, 2, …，其余顶点用颜色 0。
    返回 (着色, 判定集)，着色使用 ⌈(q-1)/|H|⌉ + 1 种颜色。
    """
    _check_asymmetric(h)
    size = h.vertex_count
    coloring = [0] * (q * size)
    chosen = []
    for z in range(q - 1):
        v = z * size + z % size
        coloring[v] = z // size + 1
        chosen.append(v)
    return coloring, chosen
