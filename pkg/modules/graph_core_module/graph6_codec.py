"""
graph6 编解码

N(n) 头部 + 上三角按列打包的位域，每 6 位加 63 成为一个可打印字节。
解析错误携带相对于原始文本的字节偏移。
"""

from typing import List, Tuple, Union

from .graph_core_module import Graph, GraphParseError
from .variables import (
    GRAPH6_HEADER,
    GRAPH6_LARGE_LIMIT,
    GRAPH6_MAX_BYTE,
    GRAPH6_MEDIUM_LIMIT,
    GRAPH6_OFFSET,
    GRAPH6_SMALL_LIMIT,
)


def _encode_size(n: int) -> List[int]:
    if n <= GRAPH6_SMALL_LIMIT:
        return [n + GRAPH6_OFFSET]
    if n <= GRAPH6_MEDIUM_LIMIT:
        return [GRAPH6_MAX_BYTE] + [((n >> s) & 63) + GRAPH6_OFFSET for s in (12, 6, 0)]
    if n <= GRAPH6_LARGE_LIMIT:
        return [GRAPH6_MAX_BYTE, GRAPH6_MAX_BYTE] + [((n >> s) & 63) + GRAPH6_OFFSET for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError(f"顶点数 {n} 超出 graph6 可表示范围")


def _decode_size(data: List[int], base: int) -> Tuple[int, int]:
    """返回 (n, 头部长度)；要求使用最短的规范编码"""
    if not data:
        raise GraphParseError("缺少 graph6 顶点数头部", base)
    if data[0] != GRAPH6_MAX_BYTE:
        return data[0] - GRAPH6_OFFSET, 1

    if len(data) >= 2 and data[1] == GRAPH6_MAX_BYTE:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise GraphParseError("graph6 顶点数头部被截断", base + len(data))
    n = 0
    for value in data[start:start + width]:
        n = (n << 6) | (value - GRAPH6_OFFSET)
    lower = GRAPH6_SMALL_LIMIT if width == 3 else GRAPH6_MEDIUM_LIMIT
    if n <= lower:
        raise GraphParseError(f"顶点数 {n} 未使用最短头部编码", base)
    return n, start + width


def parse_graph6(text: Union[str, bytes]) -> Graph:
    """解析一行 graph6 文本（可带 >>graph6<< 头部与结尾换行）"""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.rstrip("\r\n")
    base = len(GRAPH6_HEADER) if text.startswith(GRAPH6_HEADER) else 0
    body = text[base:]

    for i, ch in enumerate(body):
        if not GRAPH6_OFFSET <= ord(ch) <= GRAPH6_MAX_BYTE:
            raise GraphParseError(f"非法字节 {ord(ch)}（合法范围 63..126）", base + i)
    data = [ord(ch) for ch in body]

    n, header_len = _decode_size(data, base)
    bit_count = n * (n - 1) // 2
    byte_count = (bit_count + 5) // 6
    payload = data[header_len:]
    if len(payload) < byte_count:
        raise GraphParseError(f"位域被截断：需要 {byte_count} 字节，实际 {len(payload)}", base + len(data))
    if len(payload) > byte_count:
        raise GraphParseError("位域之后存在多余字节", base + header_len + byte_count)

    pad = byte_count * 6 - bit_count
    if pad and (payload[-1] - GRAPH6_OFFSET) & ((1 << pad) - 1):
        raise GraphParseError("填充位必须为 0", base + len(data) - 1)

    edges = []
    t = 0
    for j in range(1, n):
        for i in range(j):
            value = payload[t // 6] - GRAPH6_OFFSET
            if (value >> (5 - t % 6)) & 1:
                edges.append((i, j))
            t += 1
    return Graph.from_edges(n, edges, name="graph6")


def emit_graph6(graph: Graph, header: bool = False) -> str:
    """按给定顶点顺序输出规范 graph6 文本（不重新标号）"""
    n = graph.vertex_count
    out = _encode_size(n)
    bits = [1 if graph.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = (value << 1) | bit
        out.append(value + GRAPH6_OFFSET)
    encoded = "".join(chr(b) for b in out)
    return GRAPH6_HEADER + encoded if header else encoded
