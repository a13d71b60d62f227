"""
置换群模块变量
"""

# elements() 默认枚举上限；超过时必须改用稳定链查询
DEFAULT_ENUMERATION_CAP = 10 ** 6

# 测试期审计：闭包枚举与链计算阶数比对的规模上限
CLOSURE_AUDIT_LIMIT = 10 ** 4
