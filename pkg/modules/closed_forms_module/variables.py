"""
闭式公式模块变量
"""

# 书图算例中给出的数值（用于差异标注，定理公式优先）
WORKED_EXAMPLE_VALUES = {
    ("book", (8, 473)): {
        "vertex_count": 2840,
        "dist": 3,
        "det": 472,
        "fdist": 80,
        "upper_paint": 1573,
    },
    ("book", (8, 703)): {
        "vertex_count": 4220,
        "dist": 3,
        "upper_paint": 2762,
        "fdist": 118,
    },
}

# 差异说明
DISCREPANCY_NOTES = {
    ("book", (8, 703), "upper_paint"): "算例只计入路径上的红色顶点，漏掉了两个红色书脊顶点；按定理输出",
    ("book", (8, 703), "fdist"): "算例写作 700=116·6+7，而 n-1=702，公式给出 2+⌊702/6⌋；按定理输出",
}

# 不存在非对称图的顶点数
ORDERS_WITHOUT_ASYMMETRIC_GRAPH = (2, 3, 4, 5)

# 构造性见证的规模上限（d^{m-2} 个路径着色）
WITNESS_PATTERN_LIMIT = 10 ** 6

# 界的来源标签
BOUND_SOURCE_BROAD = "broad"
BOUND_SOURCE_REFINED = "refined"
