# -*- coding: utf-8 -*-
"""
异常定义
工作台所有可预期的失败都从 WorkbenchError 派生，并携带上下文字段
"""

from typing import Any, Dict, Optional


class WorkbenchError(Exception):
    """工作台异常基类"""

    def __init__(self, message: str, **context: Any):
        self.message = message
        self.context: Dict[str, Any] = context
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        return {"error": type(self).__name__, "message": self.message, **self.context}


class CommandNotFoundError(WorkbenchError):
    """命令未找到异常"""

    def __init__(self, command: str, cell_name: Optional[str] = None):
        self.command = command
        self.cell_name = cell_name
        message = f"Command not found: '{command}'"
        if cell_name:
            message = f"Command not found: '{command}' in cell '{cell_name}'"
        super().__init__(message, command=command, cell_name=cell_name)


class ComponentError(WorkbenchError):
    """组件执行错误"""

    def __init__(self, message: str, cell_name: Optional[str] = None):
        self.cell_name = cell_name
        super().__init__(message, cell_name=cell_name)


class ProgramSyntaxError(WorkbenchError):
    """程序文本无法解析"""

    def __init__(self, message: str, text: str = "", position: int = -1):
        super().__init__(message, text=text, position=position)


class NotationError(WorkbenchError):
    """序数记号不合法或超出可物化范围"""


class ManifestError(WorkbenchError):
    """清单文件校验失败"""

    def __init__(self, message: str, path: str = "$"):
        self.path = path
        super().__init__(f"{path}: {message}", path=path)


class UnsupportedPresentationError(WorkbenchError):
    """查询不支持该表示"""

    def __init__(self, kind: str, reason: str = ""):
        self.kind = kind
        message = f"Queries are not supported for presentation '{kind}'"
        if reason:
            message = f"{message}: {reason}"
        super().__init__(message, kind=kind)


class ConstructionError(WorkbenchError):
    """构造的前提不满足"""

    def __init__(self, construction: str, premise: str, **context: Any):
        self.construction = construction
        self.premise = premise
        super().__init__(f"{construction}: {premise}", construction=construction, **context)


class MonotoneWitnessError(ConstructionError):
    """单调变换的见证前提在给定燃料下无法确认"""

    def __init__(self, premise: str, **context: Any):
        super().__init__("monotone_finite_witness", premise, **context)


class FiniteOracleError(WorkbenchError):
    """有限划分参数不合法"""
