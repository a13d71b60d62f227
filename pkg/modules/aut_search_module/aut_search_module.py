"""
自动同构搜索模块 (Automorphism Search Module)

等价划分细化 + 个体化回溯，求（可着色）图的自同构群生成元。
颜色作为初始划分进入（按颜色编号排序的每色一格），因此着色图与普通图走同一算法。
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from modules.graph_core_module import Graph
from modules.permgroup_module import Permutation, PermutationGroup
from modules.permgroup_module.permgroup_module import orbits_of_generators

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderedPartition:
    """有序划分：cells 依次覆盖 0..n-1，每格内部升序"""
    cells: Tuple[Tuple[int, ...], ...]

    @classmethod
    def unit(cls, n: int) -> "OrderedPartition":
        return cls((tuple(range(n)),) if n else ())

    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.cells)

    def shape(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    def cell_of(self, v: int) -> int:
        for k, cell in enumerate(self.cells):
            if v in cell:
                return k
        raise KeyError(v)

    def target_cell(self) -> Optional[int]:
        """第一个最小的非单点格"""
        best = None
        for k, cell in enumerate(self.cells):
            if len(cell) > 1 and (best is None or len(cell) < len(self.cells[best])):
                best = k
        return best

    def as_sequence(self) -> List[int]:
        """离散划分对应的顶点序列"""
        return [cell[0] for cell in self.cells]


@dataclass
class AutSearchStats:
    nodes: int = 0
    leaves: int = 0
    generators: int = 0


def initial_partition(graph: Graph, colors: Optional[Sequence[int]] = None) -> OrderedPartition:
    if colors is None:
        return OrderedPartition.unit(graph.vertex_count)
    if len(colors) != graph.vertex_count:
        raise ValueError(f"着色长度 {len(colors)} 与顶点数 {graph.vertex_count} 不一致")
    classes: Dict[int, List[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    return OrderedPartition(tuple(tuple(classes[c]) for c in sorted(classes)))


def refine(graph: Graph, partition: OrderedPartition) -> OrderedPartition:
    """
    最粗的等价细化：按各顶点到每一格的邻居数签名反复分裂，
    分裂出的子格按签名排序并留在原位，因此结果与顶点编号无关。
    """
    masks = graph.masks
    cells = [list(c) for c in partition.cells]
    changed = True
    while changed:
        changed = False
        cell_masks = [sum(1 << v for v in cell) for cell in cells]
        next_cells: List[List[int]] = []
        for cell in cells:
            if len(cell) == 1:
                next_cells.append(cell)
                continue
            groups: Dict[Tuple[int, ...], List[int]] = {}
            for v in cell:
                signature = tuple((masks[v] & cm).bit_count() for cm in cell_masks)
                groups.setdefault(signature, []).append(v)
            if len(groups) == 1:
                next_cells.append(cell)
            else:
                changed = True
                next_cells.extend(groups[s] for s in sorted(groups))
        cells = next_cells
    return OrderedPartition(tuple(tuple(c) for c in cells))


def individualize(partition: OrderedPartition, v: int) -> OrderedPartition:
    """把 v 从所在格中分离出来，放在剩余部分之前"""
    k = partition.cell_of(v)
    cell = partition.cells[k]
    rest = tuple(u for u in cell if u != v)
    return OrderedPartition(partition.cells[:k] + ((v,), rest) + partition.cells[k + 1:])


def _is_automorphism(graph: Graph, images: Sequence[int], colors: Optional[Sequence[int]]) -> bool:
    if colors is not None and any(colors[images[v]] != colors[v] for v in range(graph.vertex_count)):
        return False
    adjacency = graph.adjacency
    for u, v in graph.edges():
        if images[v] not in adjacency[images[u]]:
            return False
    return True


class AutomorphismSearch:
    """
    单次搜索的状态：第一条路径 ν_0 … ν_k 给出参考叶 ζ；
    从最深层到最浅层，对目标格中不与已选分支同轨道的顶点，
    在其子树中寻找叶 λ 使 ζ→λ 为（保色）自同构。
    """

    def __init__(self, graph: Graph, colors: Optional[Sequence[int]] = None):
        self.graph = graph
        self.colors = list(colors) if colors is not None else None
        self.stats = AutSearchStats()
        self.generators: List[Permutation] = []

    def run(self) -> PermutationGroup:
        n = self.graph.vertex_count
        if n == 0:
            return PermutationGroup(0)

        path = [refine(self.graph, initial_partition(self.graph, self.colors))]
        branch: List[int] = []
        while not path[-1].is_discrete():
            cell = path[-1].cells[path[-1].target_cell()]
            branch.append(cell[0])
            path.append(refine(self.graph, individualize(path[-1], cell[0])))
        self._shapes = [p.shape() for p in path]
        self._reference = path[-1].as_sequence()

        for depth in reversed(range(len(branch))):
            node = path[depth]
            cell = node.cells[node.target_cell()]
            for v in cell:
                if v == branch[depth]:
                    continue
                # 只固定 branch[:depth] 的生成元参与轨道剪枝
                stabilizing = [g for g in self.generators if all(g.images[w] == w for w in branch[:depth])]
                orbit_cells = orbits_of_generators(n, stabilizing)
                if any(branch[depth] in oc and v in oc for oc in orbit_cells):
                    continue
                found = self._search_subtree(refine(self.graph, individualize(node, v)), depth + 1)
                if found is not None:
                    self.generators.append(found)
                    self.stats.generators += 1

        logger.debug(
            f"🔍 自同构搜索完成: 节点 {self.stats.nodes}, 叶 {self.stats.leaves}, 生成元 {len(self.generators)}"
        )
        return PermutationGroup(n, self.generators)

    def _search_subtree(self, node: OrderedPartition, depth: int) -> Optional[Permutation]:
        self.stats.nodes += 1
        if depth >= len(self._shapes) or node.shape() != self._shapes[depth]:
            return None
        if node.is_discrete():
            self.stats.leaves += 1
            images = [0] * self.graph.vertex_count
            for z, lam in zip(self._reference, node.as_sequence()):
                images[z] = lam
            if _is_automorphism(self.graph, images, self.colors):
                return Permutation(tuple(images))
            return None
        cell = node.cells[node.target_cell()]
        for v in cell:
            found = self._search_subtree(refine(self.graph, individualize(node, v)), depth + 1)
            if found is not None:
                return found
        return None


def automorphism_group(graph: Graph, colors: Optional[Sequence[int]] = None) -> PermutationGroup:
    """（保色）自同构群；每个生成元都已验证保持邻接与颜色"""
    return AutomorphismSearch(graph, colors).run()


def is_asymmetric(graph: Graph) -> bool:
    return automorphism_group(graph).is_trivial()
