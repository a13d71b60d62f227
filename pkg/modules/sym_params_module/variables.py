"""
对称性参数模块变量
"""

# 默认搜索预算：进入各候选层时累计的候选着色数上限
DEFAULT_BUDGET = 10 ** 8

# 覆盖默认预算的环境变量
BUDGET_ENV_VAR = "SYMBREAK_BUDGET"

# 不超过该阶数的群被展开成元素表，用于快速判定；更大的群走稳定链回溯
DEFAULT_ELEMENT_TABLE_CAP = 50_000

# 配置文件候选位置（相对框架根目录）
CONFIG_FILE_CANDIDATES = [
    "symbreak-config.json",
    "config/symbreak-config.json",
]

# ParamReport JSON 版本
REPORT_SCHEMA_VERSION = "1.0"

# full_report 中可能被跳过的字段
REPORT_FIELDS = ["dist", "det", "paint_cost", "upper_paint", "lower_paint", "fdist"]

# jobs > 1 时每个并行块的候选数；同时在途的块数等于 jobs
PARALLEL_CHUNK_SIZE = 4096

# get_analyzer 的 LRU 缓存容量
ANALYZER_CACHE_SIZE = 64
