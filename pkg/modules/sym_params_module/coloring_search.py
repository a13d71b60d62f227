"""
着色枚举工具：规范着色（限制增长串）、候选数估计、预算计量与按块并行的首个命中。
"""

import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import islice
from math import comb
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple, TypeVar

from .variables import PARALLEL_CHUNK_SIZE

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class BudgetExceededError(RuntimeError):
    """穷举搜索的候选数超过预算"""

    def __init__(self, field: str, estimate: int, budget: int):
        super().__init__(f"{field} 的搜索候选数 {estimate} 超过预算 {budget}")
        self.field = field
        self.estimate = estimate
        self.budget = budget


def canonical_colorings(length: int, colors: int, exact: bool = False) -> Iterator[Tuple[int, ...]]:
    """
    长度为 length、取值 0..colors-1 的限制增长串（颜色按首次出现编号），字典序。
    exact=True 时只产生恰好使用 colors 种颜色的串。
    """
    if length == 0:
        if not exact or colors == 0:
            yield ()
        return
    seq = [0] * length

    def extend(pos: int, used: int) -> Iterator[Tuple[int, ...]]:
        if exact and used + (length - pos) < colors:
            return
        if pos == length:
            yield tuple(seq)
            return
        for c in range(min(used + 1, colors)):
            seq[pos] = c
            yield from extend(pos + 1, max(used, c + 1))

    yield from extend(0, 0)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """第二类 Stirling 数 S(n, k)"""
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def coloring_count(length: int, colors: int, exact: bool = False) -> int:
    """canonical_colorings(length, colors, exact) 产生的串数"""
    if exact:
        return stirling2(length, colors)
    return sum(stirling2(length, k) for k in range(0, min(colors, length) + 1))


def estimate_candidates(vertex_count: int, class_size: int, other_colors: int, exact: bool = False) -> int:
    """一个候选层的规模：选出大小为 class_size 的颜色类，再对补集做规范着色"""
    return comb(vertex_count, class_size) * coloring_count(vertex_count - class_size, other_colors, exact)


class BudgetMeter:
    """累计各候选层的估计值，超过预算时拒绝继续"""

    def __init__(self, field: str, budget: int):
        self.field = field
        self.budget = budget
        self.spent = 0

    def charge(self, estimate: int) -> None:
        if self.spent + estimate > self.budget:
            logger.info(f"⚠️ {self.field}: 预算不足（已用 {self.spent}，本层 {estimate}，预算 {self.budget}）")
            raise BudgetExceededError(self.field, self.spent + estimate, self.budget)
        self.spent += estimate


def _chunks(candidates: Iterable[T], size: int) -> Iterator[List[T]]:
    iterator = iter(candidates)
    while True:
        chunk = list(islice(iterator, size))
        if not chunk:
            return
        yield chunk


def first_success(candidates: Iterable[T], check: Callable[[T], Optional[R]], jobs: int = 1,
                  chunk_size: int = PARALLEL_CHUNK_SIZE) -> Optional[R]:
    """
    按候选顺序返回第一个非 None 的 check 结果。

    jobs > 1 时按块流式读取候选，最多 jobs 个块同时在线程池中检查；
    结果按块的顺序取用，因此与单线程结果一致。检查本身是纯 Python，受 GIL 约束。
    """
    if jobs <= 1:
        for candidate in candidates:
            result = check(candidate)
            if result is not None:
                return result
        return None

    def scan(chunk: Sequence[T]) -> Optional[R]:
        for candidate in chunk:
            result = check(candidate)
            if result is not None:
                return result
        return None

    chunks = _chunks(candidates, chunk_size)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        pending = deque(pool.submit(scan, chunk) for chunk in islice(chunks, jobs))
        while pending:
            result = pending.popleft().result()
            if result is not None:
                for future in pending:
                    future.cancel()
                return result
            following = next(chunks, None)
            if following is not None:
                pending.append(pool.submit(scan, following))
    return None

