"""
置换群模块 (Permutation Group Module)

置换与置换群：Schreier–Sims 稳定链、阶与成员判定、轨道、
逐点稳定子（基变换）、集合稳定子与按标签保持的子群回溯搜索。

复合约定：compose(a, b)(v) = a(b(v))，即先右后左。
"""

import logging
import math
import random
from dataclasses import dataclass
from itertools import product
from typing import Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

from .variables import DEFAULT_ENUMERATION_CAP

logger = logging.getLogger(__name__)


class PermutationError(ValueError):
    """次数不一致或像数组不是双射"""


class EnumerationCapError(RuntimeError):
    """群的阶超过枚举上限"""

    def __init__(self, order: int, cap: int):
        super().__init__(f"群的阶 {order} 超过枚举上限 {cap}，请改用稳定链查询")
        self.order = order
        self.cap = cap


@dataclass(frozen=True)
class Permutation:
    """0..n-1 上的双射，images[v] 为 v 的像"""
    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise PermutationError(f"像数组不是 0..{len(self.images) - 1} 上的双射: {list(self.images)}")

    @classmethod
    def _trusted(cls, images: Tuple[int, ...]) -> "Permutation":
        # 内部热路径：调用方保证 images 已是双射
        perm = object.__new__(cls)
        object.__setattr__(perm, "images", images)
        return perm

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(n))
        for cycle in cycles:
            for k, v in enumerate(cycle):
                images[v] = cycle[(k + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def compose(self, other: "Permutation") -> "Permutation":
        """self ∘ other"""
        if other.degree != self.degree:
            raise PermutationError(f"次数不一致: {self.degree} 与 {other.degree}")
        mine = self.images
        return Permutation._trusted(tuple(mine[x] for x in other.images))

    __mul__ = compose

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for v, image in enumerate(self.images):
            inv[image] = v
        return Permutation._trusted(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == image for v, image in enumerate(self.images))

    def support(self) -> List[int]:
        return [v for v, image in enumerate(self.images) if v != image]

    def cycles(self) -> List[Tuple[int, ...]]:
        """非平凡轮换，每个以最小元素开头，按首元素排序"""
        seen = set()
        result = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            v = self.images[start]
            while v != start:
                cycle.append(v)
                seen.add(v)
                v = self.images[v]
            result.append(tuple(cycle))
        return result

    def to_list(self) -> List[int]:
        return list(self.images)

    def to_dict(self) -> Dict[str, object]:
        return {"images": self.to_list(), "cycles": [list(c) for c in self.cycles()]}


def identity(n: int) -> Permutation:
    return Permutation.identity(n)


def compose(a: Permutation, b: Permutation) -> Permutation:
    return a.compose(b)


def invert(a: Permutation) -> Permutation:
    return a.inverse()


def is_identity(a: Permutation) -> bool:
    return a.is_identity()


class PermutationGroup:
    """
    由生成元给出的置换群，构造时用确定性的 Schreier–Sims 建立稳定链。

    base_prefix 指定基的开头若干点（用于基变换）；第 i 层陪集代表元
    transversals[i][p] 把 base[i] 映到 p。群元素唯一地写成
    u_0 ∘ u_1 ∘ … ∘ u_{k-1}。
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = (),
                 base_prefix: Sequence[int] = ()):
        gens: List[Permutation] = []
        for g in generators:
            if g.degree != degree:
                raise PermutationError(f"生成元次数 {g.degree} 与群次数 {degree} 不一致")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        for b in base_prefix:
            if not 0 <= b < degree:
                raise PermutationError(f"基点 {b} 超出 0..{degree - 1}")

        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(gens)
        self._identity = Permutation.identity(degree)
        self.base: List[int] = []
        self.strong_generators: List[Permutation] = []
        self.transversals: List[Dict[int, Permutation]] = []
        self._schreier_sims(list(dict.fromkeys(base_prefix)))

    # ========== 稳定链构造 ==========

    def level_generators(self, level: int) -> List[Permutation]:
        """逐点固定 base[:level] 的强生成元"""
        fixed = self.base[:level]
        return [s for s in self.strong_generators if all(s.images[b] == b for b in fixed)]

    def _build_transversal(self, level: int) -> Dict[int, Permutation]:
        root = self.base[level]
        gens = self.level_generators(level)
        reps = {root: self._identity}
        queue = [root]
        for p in queue:
            for s in gens:
                q = s.images[p]
                if q not in reps:
                    reps[q] = s.compose(reps[p])
                    queue.append(q)
        return reps

    def _sift(self, g: Permutation, start: int) -> Tuple[Permutation, int]:
        for level in range(start, len(self.base)):
            image = g.images[self.base[level]]
            rep = self.transversals[level].get(image)
            if rep is None:
                return g, level
            g = rep.inverse().compose(g)
        return g, len(self.base)

    def _schreier_sims(self, base_prefix: List[int]) -> None:
        self.base = list(base_prefix)
        self.strong_generators = list(self.generators)
        for s in self.strong_generators:
            if all(s.images[b] == b for b in self.base):
                self.base.append(s.support()[0])
        self.transversals = [self._build_transversal(i) for i in range(len(self.base))]

        level = len(self.base) - 1
        while level >= 0:
            restarted = False
            reps = self.transversals[level]
            for p in sorted(reps):
                for s in self.level_generators(level):
                    schreier = reps[s.images[p]].inverse().compose(s).compose(reps[p])
                    if schreier.is_identity():
                        continue
                    residue, depth = self._sift(schreier, level + 1)
                    if depth == len(self.base) and residue.is_identity():
                        continue
                    self.strong_generators.append(residue)
                    if depth == len(self.base):
                        self.base.append(residue.support()[0])
                        self.transversals.append({})
                    for refreshed in range(level + 1, depth + 1):
                        self.transversals[refreshed] = self._build_transversal(refreshed)
                    level = depth
                    restarted = True
                    break
                if restarted:
                    break
            if not restarted:
                level -= 1
        logger.debug(f"✓ 稳定链: base={self.base}, 强生成元 {len(self.strong_generators)} 个, 阶 {self.order()}")

    # ========== 基本查询 ==========

    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    def is_trivial(self) -> bool:
        return not self.generators

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise PermutationError(f"次数不一致: {g.degree} 与 {self.degree}")
        residue, depth = self._sift(g, 0)
        return depth == len(self.base) and residue.is_identity()

    __contains__ = contains

    def orbit(self, point: int) -> List[int]:
        return _orbit_of(point, self.generators)

    def orbits(self) -> List[List[int]]:
        return orbits_of_generators(self.degree, self.generators)

    def elements(self, cap: int = DEFAULT_ENUMERATION_CAP) -> List[Permutation]:
        order = self.order()
        if order > cap:
            raise EnumerationCapError(order, cap)
        return list(self.iter_elements())

    def iter_elements(self) -> Iterator[Permutation]:
        """按陪集代表元乘积逐个产生元素（每个恰好一次）"""
        levels = [[t[p] for p in sorted(t)] for t in self.transversals]
        for factors in product(*levels):
            g = self._identity
            for u in factors:
                g = g.compose(u)
            yield g

    def random_element(self, rng: random.Random) -> Permutation:
        g = self._identity
        for t in self.transversals:
            g = g.compose(t[rng.choice(sorted(t))])
        return g

    def to_dict(self) -> Dict[str, object]:
        return {
            "degree": self.degree,
            "order": self.order(),
            "base": list(self.base),
            "generators": [g.to_list() for g in self.generators],
            "orbits": self.orbits(),
        }

    # ========== 按标签保持的回溯搜索 ==========

    def _coset_search(self, level: int, prefix: Permutation, labels: Sequence[Hashable]) -> Optional[Permutation]:
        """在陪集 prefix ∘ G^{(level)} 中寻找保持 labels 的元素"""
        if level == len(self.base):
            images = prefix.images
            if all(labels[images[v]] == labels[v] for v in range(self.degree)):
                return prefix
            return None
        want = labels[self.base[level]]
        reps = self.transversals[level]
        for gamma in sorted(reps):
            if labels[prefix.images[gamma]] != want:
                continue
            found = self._coset_search(level + 1, prefix.compose(reps[gamma]), labels)
            if found is not None:
                return found
        return None

    def find_label_preserving(self, labels: Sequence[Hashable]) -> Optional[Permutation]:
        """
        返回一个保持 labels（labels[g(v)] == labels[v]）的非平凡元素，不存在时返回 None。
        非平凡元素总有第一个被移动的基点，按层穷举该基点的像即可完备。
        """
        for level in reversed(range(len(self.base))):
            b = self.base[level]
            reps = self.transversals[level]
            for gamma in sorted(reps):
                if gamma == b or labels[gamma] != labels[b]:
                    continue
                found = self._coset_search(level + 1, reps[gamma], labels)
                if found is not None:
                    return found
        return None

    def label_stabilizer(self, labels: Sequence[Hashable]) -> "PermutationGroup":
        """
        子群 {g : labels[g(v)] == labels[v] 对所有 v 成立}，自底向上逐层求生成元；
        已在当前生成元轨道中的基点像被跳过。
        """
        gens: List[Permutation] = []
        for level in reversed(range(len(self.base))):
            b = self.base[level]
            reps = self.transversals[level]
            reached = set(_orbit_of(b, gens))
            for gamma in sorted(reps):
                if gamma in reached or labels[gamma] != labels[b]:
                    continue
                found = self._coset_search(level + 1, reps[gamma], labels)
                if found is not None:
                    gens.append(found)
                    reached = set(_orbit_of(b, gens))
        return PermutationGroup(self.degree, gens)


def _orbit_of(point: int, generators: Sequence[Permutation]) -> List[int]:
    seen = {point}
    queue = [point]
    for p in queue:
        for g in generators:
            q = g.images[p]
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return sorted(seen)


def orbits_of_generators(degree: int, generators: Sequence[Permutation]) -> List[List[int]]:
    """并查集合并生成元的像；轨道内升序，轨道按最小元素排序"""
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for v, image in enumerate(g.images):
            rv, ri = find(v), find(image)
            if rv != ri:
                parent[max(rv, ri)] = min(rv, ri)

    cells: Dict[int, List[int]] = {}
    for v in range(degree):
        cells.setdefault(find(v), []).append(v)
    return [cells[root] for root in sorted(cells)]


# ========== 模块级操作 ==========

def build_group(generators: Sequence[Permutation], degree: Optional[int] = None) -> PermutationGroup:
    if degree is None:
        if not generators:
            raise PermutationError("空生成元列表需要显式给出次数")
        degree = generators[0].degree
    return PermutationGroup(degree, generators)


def orbits(group: PermutationGroup) -> List[List[int]]:
    return group.orbits()


def pointwise_stabilizer(group: PermutationGroup, points: Iterable[int]) -> PermutationGroup:
    """基变换：以 points 作为基的前缀重建链，取固定这些点的强生成元"""
    fixed = sorted(set(points))
    if not fixed or group.is_trivial():
        return group
    rebased = PermutationGroup(group.degree, group.generators, base_prefix=fixed)
    return PermutationGroup(group.degree, rebased.level_generators(len(fixed)))


def setwise_stabilizer(group: PermutationGroup, points: Iterable[int]) -> PermutationGroup:
    members = set(points)
    return group.label_stabilizer([v in members for v in range(group.degree)])


def elements(group: PermutationGroup, cap: int = DEFAULT_ENUMERATION_CAP) -> List[Permutation]:
    return group.elements(cap)
