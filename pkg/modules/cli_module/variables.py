"""
命令行模块变量
"""

# 退出码
EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_UNSUPPORTED = 4

# 异常类型名 -> 退出码（其余异常一律视为内部错误）
ERROR_EXIT_CODES = {
    "GraphValidationError": EXIT_INPUT,
    "GraphParseError": EXIT_INPUT,
    "DomainError": EXIT_INPUT,
    "PermutationError": EXIT_INPUT,
    "BudgetExceededError": EXIT_BUDGET,
    "EnumerationCapError": EXIT_BUDGET,
    "UnsupportedFamilyError": EXIT_UNSUPPORTED,
}

# JSON 输出的 Schema（相对框架根目录）
OUTPUT_SCHEMA_PATH = "schemas/symbreak-output.schema.json"

# 区间写法 "a..b"
RANGE_SEPARATOR = ".."

# verify-books 的 CSV 列
VERIFY_CSV_COLUMNS = ["m", "n", "d", "param", "formula", "oracle", "match", "status"]
