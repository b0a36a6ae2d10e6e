# -*- coding: utf-8 -*-
"""
组件接口定义
定义所有组件必须实现的统一接口
"""

from abc import abstractmethod
from typing import Any, Dict


class ICell:
    """组件统一接口

    所有组件经由命令分发器以 '组件名:命令:参数' 调用，例如：
        machine:eval:{"program": "(succ)", "input": 7}
        relations:query:{"relation": "delta3", "m": 2, "n": 2}
    """

    @property
    @abstractmethod
    def cell_name(self) -> str:
        """组件名称（小写），即命令的第一段"""

    @abstractmethod
    def execute(self, command: str, *args, **kwargs) -> Any:
        """执行命令，返回可 JSON 序列化的结果"""

    @abstractmethod
    def get_commands(self) -> Dict[str, str]:
        """{命令名: 命令描述}"""
