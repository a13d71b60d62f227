"""
图核心模块 (Graph Core Module)

有限简单图的不可变表示、边列表文本格式、家族描述符解析，
以及书图 B_{m,n}、超立方体、笛卡尔积等图族的生成器。
"""

import logging
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .variables import (
    ASYMMETRIC6_EDGES,
    FAMILY_ARITY,
    FAMILY_MINIMUMS,
    HYPERCUBE_MAX_DIMENSION,
)

logger = logging.getLogger(__name__)


class GraphValidationError(ValueError):
    """图不满足不变量（对称邻接、无自环、顶点编号连续）"""


class GraphParseError(ValueError):
    """图文本解析失败；offset 为字节偏移（graph6）或行号（边列表）"""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class DomainError(ValueError):
    """参数超出定义域"""


@dataclass(frozen=True)
class BookLayout:
    """
    书图 B_{m,n} 的顶点坐标。

    编号约定：v_0 = 0，v_{m-1} = 1，随后按页优先顺序排列路径顶点
    v_{1,1}, …, v_{m-2,1}, v_{1,2}, …
    """
    m: int
    n: int

    @property
    def spinal(self) -> Tuple[int, int]:
        return (0, 1)

    @property
    def path_length(self) -> int:
        return self.m - 2

    @property
    def vertex_count(self) -> int:
        return 2 + self.n * (self.m - 2)

    @property
    def edge_count(self) -> int:
        return 1 + self.n * (self.m - 1)

    def path_vertex(self, j: int, i: int) -> int:
        """v_{j,i} 的编号，j ∈ 1..m-2 为页内位置，i ∈ 1..n 为页号"""
        if not 1 <= j <= self.m - 2:
            raise DomainError(f"路径位置 j={j} 超出范围 1..{self.m - 2}")
        if not 1 <= i <= self.n:
            raise DomainError(f"页号 i={i} 超出范围 1..{self.n}")
        return 2 + (i - 1) * (self.m - 2) + (j - 1)

    def page(self, i: int) -> List[int]:
        """第 i 页的路径顶点（按 j 递增）"""
        return [self.path_vertex(j, i) for j in range(1, self.m - 1)]

    def coordinate(self, v: int) -> str:
        if v == 0:
            return "v0"
        if v == 1:
            return f"v{self.m - 1}"
        offset = v - 2
        i, j = divmod(offset, self.m - 2)
        return f"v{j + 1}_{i + 1}"


@dataclass(frozen=True)
class Graph:
    """
    有限简单图。构造后不可变，可在线程间共享。

    adjacency[v] 为 v 的邻居集合；labels 为可选的语义标签
    （书图坐标、超立方体比特串、积图纤维坐标）。
    """
    vertex_count: int
    adjacency: Tuple[FrozenSet[int], ...]
    labels: Optional[Tuple[str, ...]] = None
    name: str = ""
    book: Optional[BookLayout] = None
    fiber_shape: Optional[Tuple[int, int]] = None
    masks: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise GraphValidationError("顶点数不能为负")
        if len(self.adjacency) != n:
            raise GraphValidationError(f"邻接表长度 {len(self.adjacency)} 与顶点数 {n} 不一致")
        for v, neighbors in enumerate(self.adjacency):
            for u in neighbors:
                if not 0 <= u < n:
                    raise GraphValidationError(f"顶点 {v} 的邻居 {u} 超出 0..{n - 1}")
                if u == v:
                    raise GraphValidationError(f"顶点 {v} 存在自环")
                if v not in self.adjacency[u]:
                    raise GraphValidationError(f"邻接不对称: {v}->{u}")
        if self.labels is not None:
            if len(self.labels) != n:
                raise GraphValidationError("标签数量与顶点数不一致")
            if len(set(self.labels)) != n:
                raise GraphValidationError("顶点标签必须互不相同")
        object.__setattr__(
            self, "masks",
            tuple(sum(1 << u for u in neighbors) for neighbors in self.adjacency),
        )

    @classmethod
    def from_edges(cls,
                   vertex_count: int,
                   edges: Iterable[Tuple[int, int]],
                   labels: Optional[Sequence[str]] = None,
                   name: str = "",
                   book: Optional[BookLayout] = None,
                   fiber_shape: Optional[Tuple[int, int]] = None) -> "Graph":
        adjacency: List[set] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphValidationError(f"边 ({u},{v}) 的端点超出 0..{vertex_count - 1}")
            if u == v:
                raise GraphValidationError(f"顶点 {u} 存在自环")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(
            vertex_count=vertex_count,
            adjacency=tuple(frozenset(a) for a in adjacency),
            labels=tuple(labels) if labels is not None else None,
            name=name,
            book=book,
            fiber_shape=fiber_shape,
        )

    def edges(self) -> List[Tuple[int, int]]:
        """按 (u, v), u < v 字典序排列的边表"""
        return [(u, v) for u in range(self.vertex_count) for v in sorted(self.adjacency[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def describe(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
        }


# ========== 边列表文本格式 ==========

def parse_edge_list(text: str) -> Graph:
    """
    解析边列表：首行 "n m"，随后 m 行 "u v"（0 起始编号）。
    空行被忽略；错误的 offset 为 1 起始的行号。
    """
    rows = [(no, line.split()) for no, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not rows:
        raise GraphParseError("边列表为空", 0)

    header_no, header = rows[0]
    if len(header) != 2 or not all(t.isdigit() for t in header):
        raise GraphParseError("首行必须为 'n m'", header_no)
    n, m = int(header[0]), int(header[1])
    if len(rows) - 1 != m:
        raise GraphParseError(f"声明 {m} 条边，实际 {len(rows) - 1} 行", rows[-1][0])

    seen = set()
    edges = []
    for line_no, tokens in rows[1:]:
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise GraphParseError("边行必须为 'u v'", line_no)
        u, v = int(tokens[0]), int(tokens[1])
        if u >= n or v >= n:
            raise GraphParseError(f"端点超出 0..{n - 1}", line_no)
        if u == v:
            raise GraphParseError("不允许自环", line_no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"重复的边 {key}", line_no)
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges, name="edge-list")


def emit_edge_list(graph: Graph) -> str:
    lines = [f"{graph.vertex_count} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def load_graph(text: str) -> Graph:
    """自动识别 graph6 或边列表文本"""
    from .graph6_codec import parse_graph6

    stripped = text.strip()
    if not stripped:
        raise GraphParseError("输入为空", 0)
    first_line = stripped.splitlines()[0]
    if len(first_line.split()) > 1:
        return parse_edge_list(stripped)
    return parse_graph6(stripped)


# ========== 图族生成器 ==========

def make_book(m: int, n: int) -> Graph:
    """B_{m,n}：n 个 C_m 沿同一条边（书脊 v_0 v_{m-1}）粘合"""
    if m < 3 or n < 1:
        raise DomainError(f"书图要求 m ≥ 3 且 n ≥ 1，收到 m={m}, n={n}")
    layout = BookLayout(m, n)
    edges = [(0, 1)]
    for i in range(1, n + 1):
        page = layout.page(i)
        edges.append((0, page[0]))
        edges.extend(zip(page, page[1:]))
        edges.append((page[-1], 1))
    labels = [layout.coordinate(v) for v in range(layout.vertex_count)]
    return Graph.from_edges(layout.vertex_count, edges, labels=labels, name=f"book:{m},{n}", book=layout)


def cycle_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(v, (v + 1) % m) for v in range(m)], name=f"cycle:{m}")


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)], name=f"path:{n}")


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2), name=f"complete:{n}")


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b}；较小的一侧先编号（K_{5,1} 的中心为顶点 0）"""
    first, second = (b, a) if b < a else (a, b)
    edges = [(u, first + v) for u in range(first) for v in range(second)]
    return Graph.from_edges(first + second, edges, name=f"complete_bipartite:{a},{b}")


def hypercube_graph(k: int) -> Graph:
    """Q_k：顶点为 k 位比特串，相差一位的顶点相邻"""
    if k > HYPERCUBE_MAX_DIMENSION:
        raise DomainError(f"超立方体维数 {k} 超过上限 {HYPERCUBE_MAX_DIMENSION}")
    n = 1 << k
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(k) if v < v ^ (1 << b)]
    labels = [format(v, f"0{k}b") for v in range(n)]
    return Graph.from_edges(n, edges, labels=labels, name=f"hypercube:{k}")


def asymmetric6_graph() -> Graph:
    return Graph.from_edges(6, ASYMMETRIC6_EDGES, name="asymmetric6")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """
    G□H：顶点 (z, x) 编号为 z·|H| + x；同一 z 的顶点构成一条 H-纤维。
    """
    if g.vertex_count == 0 or h.vertex_count == 0:
        raise DomainError("笛卡尔积要求两个因子都非空")
    size_h = h.vertex_count
    edges = []
    for z in range(g.vertex_count):
        for x, y in h.edges():
            edges.append((z * size_h + x, z * size_h + y))
    for z1, z2 in g.edges():
        for x in range(size_h):
            edges.append((z1 * size_h + x, z2 * size_h + x))
    labels = [f"({g.label_of(z)},{h.label_of(x)})" for z in range(g.vertex_count) for x in range(size_h)]
    name = f"{g.name or 'G'}x{h.name or 'H'}"
    return Graph.from_edges(g.vertex_count * size_h, edges, labels=labels, name=name,
                            fiber_shape=(g.vertex_count, size_h))


@dataclass(frozen=True)
class FamilySpec:
    """家族描述符 "name:arg,arg" 的解析结果"""
    name: str
    args: Tuple[int, ...] = ()

    def __str__(self):
        return f"{self.name}:{','.join(map(str, self.args))}" if self.args else self.name


_FAMILY_PATTERN = re.compile(r"^([a-z_0-9]+)(?::(.*))?$")


def parse_family_spec(text: str) -> FamilySpec:
    match = _FAMILY_PATTERN.match(text.strip())
    if not match:
        raise GraphParseError(f"无法解析家族描述符 '{text}'", 0)
    name, raw_args = match.group(1), match.group(2)
    if name not in FAMILY_ARITY:
        raise GraphParseError(f"未知的图族 '{name}'", 0)

    args: Tuple[int, ...] = ()
    if raw_args:
        try:
            args = tuple(int(a) for a in raw_args.split(","))
        except ValueError:
            raise GraphParseError(f"家族参数必须为整数: '{raw_args}'", len(name) + 1)
    if len(args) != FAMILY_ARITY[name]:
        raise GraphParseError(f"图族 '{name}' 需要 {FAMILY_ARITY[name]} 个参数，收到 {len(args)}", len(name))
    for value, minimum in zip(args, FAMILY_MINIMUMS.get(name, ())):
        if value < minimum:
            raise DomainError(f"图族 '{name}' 的参数 {value} 小于下限 {minimum}")
    return FamilySpec(name, args)


def make_family(spec: Union[FamilySpec, str]) -> Graph:
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    name, args = spec.name, spec.args

    if name == "cycle":
        return cycle_graph(*args)
    if name == "complete":
        return complete_graph(*args)
    if name == "complete_bipartite":
        return complete_bipartite_graph(*args)
    if name == "hypercube":
        return hypercube_graph(*args)
    if name == "path":
        return path_graph(*args)
    if name == "book":
        return make_book(*args)
    if name == "asymmetric6":
        return asymmetric6_graph()
    if name == "product":
        return cartesian_product(complete_graph(args[0]), asymmetric6_graph())
    raise GraphParseError(f"未知的图族 '{name}'", 0)


# ========== 顶点引用与 networkx 互转 ==========

def label_index(graph: Graph, token: str) -> int:
    """
    把 CLI 中的顶点引用解析为编号。图带标签时标签优先（"010" 按比特串而非十进制）。
    """
    token = token.strip()
    if graph.labels is not None and token in graph.labels:
        return graph.labels.index(token)
    if token.isdigit():
        v = int(token)
        if v < graph.vertex_count:
            return v
        raise GraphParseError(f"顶点编号 {v} 超出 0..{graph.vertex_count - 1}", 0)
    raise GraphParseError(f"未知的顶点引用 '{token}'", 0)


def resolve_vertices(graph: Graph, tokens: Iterable[Union[str, int]]) -> List[int]:
    """逐个解析顶点引用，保持输入顺序"""
    return [label_index(graph, str(token)) for token in tokens]


def to_networkx(graph: Graph):
    import networkx as nx

    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(graph.vertex_count))
    nx_graph.add_edges_from(graph.edges())
    return nx_graph


def from_networkx(nx_graph, name: str = "") -> Graph:
    """节点按排序后的顺序重新编号为 0..n-1"""
    nodes = sorted(nx_graph.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    edges = [(index[u], index[v]) for u, v in nx_graph.edges()]
    return Graph.from_edges(len(nodes), edges, name=name)


def resolve_graph(source: Mapping[str, str]) -> Graph:
    """
    从图来源描述构造图，恰好指定一项：
    {"family": "book:4,3"} / {"graph6": "D?{"} / {"text": "<graph6 或边列表>"} / {"path": "g.txt"}
    """
    from .graph6_codec import parse_graph6

    given = [key for key in ("family", "graph6", "text", "path") if source.get(key)]
    if len(given) != 1:
        raise GraphParseError(f"必须且只能指定一种图输入，收到 {given or '无'}", 0)
    key = given[0]
    value = source[key]
    if key == "family":
        return make_family(value)
    if key == "graph6":
        return parse_graph6(value)
    if key == "text":
        return load_graph(value)
    try:
        with open(value, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise GraphParseError(f"无法读取输入文件 {value}: {e}", 0)
    return load_graph(text)
