#!/usr/bin/env python3
"""
SymBreak 命令行启动脚本

示例：
    python backend_projects/SymBreak/start_cli.py analyze --family cycle:5
    python backend_projects/SymBreak/start_cli.py verify-books --m 4..5 --n 2..4
    python backend_projects/SymBreak/start_cli.py table --family book --m 8 --n 473,703 --format markdown
"""

import sys
from pathlib import Path

# 添加框架根目录到Python路径
framework_root = Path(__file__).resolve().parent.parent.parent
sys.path.insert(0, str(framework_root))

try:
    from modules.cli_module import main
except ImportError as e:
    print(f"❌ 导入模块失败: {e}", file=sys.stderr)
    print(f"请确认依赖已安装，且框架根目录为 {framework_root}", file=sys.stderr)
    sys.exit(1)


if __name__ == "__main__":
    sys.exit(main())
