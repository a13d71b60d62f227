"""
搜索配置：预算、枚举上限与并行度。
查找顺序：显式对象 → 显式文件 → 候选配置文件 → 默认值；环境变量 SYMBREAK_BUDGET 覆盖预算。
"""

import json
import logging
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Dict, Optional

from modules.permgroup_module.variables import DEFAULT_ENUMERATION_CAP

from .variables import (
    BUDGET_ENV_VAR,
    CONFIG_FILE_CANDIDATES,
    DEFAULT_BUDGET,
    DEFAULT_ELEMENT_TABLE_CAP,
)

logger = logging.getLogger(__name__)

FRAMEWORK_ROOT = Path(__file__).resolve().parent.parent.parent


@dataclass(frozen=True)
class SearchConfig:
    """穷举搜索配置"""
    budget: int = DEFAULT_BUDGET
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    element_table_cap: int = DEFAULT_ELEMENT_TABLE_CAP
    jobs: int = 1
    include_witnesses: bool = True

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError(f"预算必须为正整数，收到 {self.budget}")
        if self.jobs < 1:
            raise ValueError(f"并行数必须为正整数，收到 {self.jobs}")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SearchConfig":
        """从字典创建配置对象（支持 {"search": {...}, "output": {...}} 嵌套形式）"""
        search = data.get("search", data)
        output = data.get("output", {})
        return cls(
            budget=int(search.get("budget", DEFAULT_BUDGET)),
            enumeration_cap=int(search.get("enumeration_cap", DEFAULT_ENUMERATION_CAP)),
            element_table_cap=int(search.get("element_table_cap", DEFAULT_ELEMENT_TABLE_CAP)),
            jobs=int(search.get("jobs", 1)),
            include_witnesses=bool(output.get("include_witnesses", search.get("include_witnesses", True))),
        )

    def with_overrides(self, budget: Optional[int] = None, jobs: Optional[int] = None,
                       include_witnesses: Optional[bool] = None) -> "SearchConfig":
        changes: Dict[str, Any] = {}
        if budget is not None:
            changes["budget"] = budget
        if jobs is not None:
            changes["jobs"] = jobs
        if include_witnesses is not None:
            changes["include_witnesses"] = include_witnesses
        return replace(self, **changes) if changes else self


def load_search_config(config: Optional[SearchConfig] = None,
                       config_file: Optional[str] = None) -> SearchConfig:
    """按查找顺序加载配置，最后应用环境变量覆盖"""
    if config is None:
        config_path = None
        if config_file:
            config_path = Path(config_file)
        else:
            for candidate in CONFIG_FILE_CANDIDATES:
                if (FRAMEWORK_ROOT / candidate).exists():
                    config_path = FRAMEWORK_ROOT / candidate
                    break

        if config_path is not None and config_path.exists():
            try:
                with open(config_path, "r", encoding="utf-8") as f:
                    config = SearchConfig.from_dict(json.load(f))
                logger.debug(f"✓ 从文件加载搜索配置: {config_path}")
            except (OSError, ValueError) as e:
                logger.error(f"❌ 加载搜索配置失败: {e}")
                config = SearchConfig()
        else:
            if config_file:
                logger.warning(f"⚠️ 配置文件不存在: {config_file}，使用默认配置")
            config = SearchConfig()

    env_budget = os.environ.get(BUDGET_ENV_VAR)
    if env_budget:
        try:
            config = config.with_overrides(budget=int(env_budget))
        except ValueError:
            logger.warning(f"⚠️ 忽略无效的 {BUDGET_ENV_VAR}={env_budget!r}")
    return config
