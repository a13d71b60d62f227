"""
函数/能力注册与编排系统（API Registry）
统一以 @register_api 为入口进行注册，inputs/outputs 作为契约源。
CLI 与工作流都通过注册中心按名称调用能力（例如 "sym_params.full_report"）。
"""
from typing import Any, Callable, Dict, List, Optional
from dataclasses import dataclass
import inspect
import logging

logger = logging.getLogger(__name__)


@dataclass
class FunctionSpec:
    """函数规范 - 描述函数的输入输出"""
    name: str
    inputs: List[str]  # 输入参数名列表
    outputs: List[str]  # 输出字段名列表
    description: str = ""

    def __repr__(self):
        return f"{self.name}({', '.join(self.inputs)}) -> {{{', '.join(self.outputs)}}}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "inputs": list(self.inputs),
            "outputs": list(self.outputs),
            "description": self.description,
        }


class FunctionRegistry:
    """函数与工作流注册中心"""

    def __init__(self):
        self.functions: Dict[str, Callable] = {}
        self.specs: Dict[str, FunctionSpec] = {}
        self.workflows: Dict[str, Callable] = {}

    def register(self,
                 name: str,
                 func: Callable,
                 inputs: Optional[List[str]] = None,
                 outputs: Optional[List[str]] = None,
                 description: str = "") -> None:
        """
        注册一个函数/能力（API 统一入口）

        Args:
            name: 能力名称（点分式，<模块>.<操作>）
            func: 可调用对象
            inputs: 输入参数名列表，缺省时从函数签名提取
            outputs: 输出字段名列表，缺省为 ['result']
            description: 描述
        """
        if inputs is None:
            inputs = list(inspect.signature(func).parameters.keys())
        if outputs is None:
            outputs = ['result']

        if name in self.functions and self.functions[name] is not func:
            logger.warning(f"⚠️ 能力 '{name}' 已被覆盖")

        self.functions[name] = func
        self.specs[name] = FunctionSpec(name, list(inputs), list(outputs), description)
        logger.debug(f"✓ 已注册函数: {self.specs[name]}")

    def call(self, name: str, **kwargs) -> Dict[str, Any]:
        """
        调用注册的函数

        只传递规范中声明过的参数；返回值不是字典时按输出规范包装。
        """
        if name not in self.functions:
            raise ValueError(f"函数 {name} 未注册")

        func = self.functions[name]
        spec = self.specs[name]

        func_args = {param: kwargs[param] for param in spec.inputs if param in kwargs}
        result = func(**func_args)

        if not isinstance(result, dict):
            if len(spec.outputs) == 1:
                result = {spec.outputs[0]: result}
            else:
                result = {"result": result}
        return result

    def list_functions(self, prefix: Optional[str] = None) -> List[str]:
        """列出已注册的API名称，可按点分前缀过滤"""
        names = sorted(self.functions.keys())
        if prefix:
            names = [n for n in names if n.startswith(prefix)]
        return names

    def get_spec(self, name: str) -> Optional[FunctionSpec]:
        """获取函数规范"""
        return self.specs.get(name)

    def register_workflow(self, name: str, workflow: Callable):
        """注册一个工作流"""
        if name in self.workflows and self.workflows[name] is not workflow:
            logger.warning(f"⚠️ 工作流 '{name}' 已被覆盖")
        self.workflows[name] = workflow
        logger.debug(f"✓ 已注册工作流: {name}")

    def get_workflow(self, name: str) -> Optional[Callable]:
        """获取一个已注册的工作流"""
        return self.workflows.get(name)

    def run_workflow(self, name: str, **kwargs) -> Any:
        """按名称运行工作流"""
        workflow = self.get_workflow(name)
        if workflow is None:
            raise ValueError(f"工作流 {name} 未注册")
        return workflow(**kwargs)

    def list_workflows(self) -> List[str]:
        """列出所有已注册的工作流"""
        return sorted(self.workflows.keys())


# 全局注册器
_registry = FunctionRegistry()


def get_registry() -> FunctionRegistry:
    """获取全局注册器"""
    return _registry


def register_workflow(name: str):
    """装饰器：注册工作流"""
    def decorator(func):
        _registry.register_workflow(name, func)
        return func
    return decorator


def register_api(name: Optional[str] = None,
                 inputs: Optional[List[str]] = None,
                 outputs: Optional[List[str]] = None,
                 description: str = ""):
    """
    装饰器：注册API（统一入口）

    使用方法:
        @register_api(name="permgroup.orbits", outputs=["orbits"])
        def api_orbits(...):
            ...
    """
    def decorator(func):
        func_name = name or func.__name__
        _registry.register(func_name, func, inputs, outputs, description)
        return func

    return decorator


def get_registered_api(name: str) -> Callable:
    """获取已注册的API"""
    if name not in _registry.functions:
        raise ValueError(f"API {name} 未注册")
    return _registry.functions[name]


def error_response(exc: BaseException) -> Dict[str, Any]:
    """统一的失败返回：保留异常类型名，调用方据此决定退出码"""
    return {"success": False, "error": type(exc).__name__, "message": str(exc)}
