"""
图核心模块变量
"""

# graph6 格式常量
GRAPH6_HEADER = ">>graph6<<"
GRAPH6_OFFSET = 63          # 每个字节的偏移量
GRAPH6_MAX_BYTE = 126       # 合法字节上限（'~'）
GRAPH6_SMALL_LIMIT = 62     # 单字节顶点数上限
GRAPH6_MEDIUM_LIMIT = 258047  # 4 字节顶点数上限（18 位）
GRAPH6_LARGE_LIMIT = 68719476735  # 8 字节顶点数上限（36 位）

# 家族描述符名称 -> 参数个数
FAMILY_ARITY = {
    "cycle": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "hypercube": 1,
    "path": 1,
    "book": 2,
    "asymmetric6": 0,
    "product": 1,
}

# 家族参数下限
FAMILY_MINIMUMS = {
    "cycle": (3,),
    "complete": (1,),
    "complete_bipartite": (1, 1),
    "hypercube": (1,),
    "path": (1,),
    "book": (3, 1),
    "product": (1,),
}

# 内置 6 顶点非对称图：路径 0-1-2-3-4，顶点 5 同时连接 2 和 3
ASYMMETRIC6_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (3, 5))

# 超立方体维数上限（2^k 顶点）
HYPERCUBE_MAX_DIMENSION = 16
