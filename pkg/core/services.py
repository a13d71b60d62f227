"""
统一服务管理系统 (Unified Service Management System)

负责动态发现 api/* 封装层并导入其实现文件，从而触发 @register_api / @register_workflow 注册。
框架根目录由本文件位置推导，不依赖当前工作目录。
"""

import os
import importlib
import logging
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)

FRAMEWORK_ROOT = Path(__file__).resolve().parent.parent


@dataclass
class ServiceRegistry:
    """服务注册表"""
    module_services: Dict[str, Any] = field(default_factory=dict)
    failed_modules: Dict[str, str] = field(default_factory=dict)


class UnifiedServiceManager:
    """
    统一服务管理器（单例）

    1. 扫描 api/** 下与目录同名的实现文件
    2. 导入它们以触发能力注册
    3. 记录已加载模块，支持按名称定位
    """

    _instance = None
    _lock = threading.Lock()

    def __new__(cls):
        if cls._instance is None:
            with cls._lock:
                if cls._instance is None:
                    cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if hasattr(self, "_initialized"):
            return
        self._initialized = True
        self.services = ServiceRegistry()
        self._base_path = FRAMEWORK_ROOT
        self._loaded = False

    def discover_modules(self) -> List[str]:
        """
        扫描 api/*，返回可导入的实现文件路径（按字典序，保证注册顺序稳定）。

        例如：
            api/modules/sym_params/sym_params.py        -> api.modules.sym_params.sym_params
            api/workflow/verify_books/verify_books.py   -> api.workflow.verify_books.verify_books
        """
        module_paths: List[str] = []
        root_dir = self._base_path / "api"
        if not root_dir.exists():
            return module_paths

        for init_file in sorted(root_dir.rglob("__init__.py")):
            package_dir = init_file.parent
            impl_file = package_dir / f"{package_dir.name}.py"
            if not impl_file.exists():
                continue
            relative_to_root = package_dir.relative_to(self._base_path)
            import_path = str(relative_to_root).replace(os.path.sep, ".")
            full_import_path = f"{import_path}.{package_dir.name}"
            if full_import_path not in module_paths:
                module_paths.append(full_import_path)
        return module_paths

    def load_project_modules(self, force: bool = False) -> int:
        """导入全部封装层实现文件，返回成功加载的数量（重复调用时直接返回缓存结果）"""
        if self._loaded and not force:
            return len(self.services.module_services)

        loaded = 0
        for module_path in self.discover_modules():
            try:
                module = importlib.import_module(module_path)
            except ImportError as e:
                self.services.failed_modules[module_path] = str(e)
                logger.error(f"❌ 模块加载失败 {module_path}: {e}")
                continue
            parts = module_path.split(".")
            self.services.module_services[f"core.{parts[-2]}"] = module
            loaded += 1
            logger.debug(f"✓ 加载模块: core.{parts[-2]} ({module_path})")

        self._loaded = True
        return loaded

    def get_service(self, name: str) -> Optional[Any]:
        """按名称获取已加载模块"""
        return self.services.module_services.get(name)

    def list_services(self) -> List[str]:
        """列出所有已加载模块"""
        return sorted(self.services.module_services.keys())


service_manager = UnifiedServiceManager()


def get_service_manager() -> UnifiedServiceManager:
    """获取全局服务管理器"""
    return service_manager
