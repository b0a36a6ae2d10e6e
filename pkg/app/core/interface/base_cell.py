# -*- coding: utf-8 -*-
"""
BaseCell - 基础组件类
提供自动命令映射、依赖注入和事件支持
"""

from typing import Any, Dict

from app.core.bus import event_bus, register_component_handlers
from app.core.di.container import AutoInjectMeta
from app.core.exception import CommandNotFoundError
from app.core.interface.icell import ICell
from app.core.util.logger import LogMixin


class BaseCell(ICell, LogMixin, metaclass=AutoInjectMeta):
    """以 _cmd_<名称> 方法提供命令的组件"""

    COMMAND_PREFIX = "_cmd_"

    def on_load(self):
        """组件加载后调用，用于注册事件处理器"""
        register_component_handlers(self)

    @property
    def cell_name(self) -> str:
        return self.__class__.__name__.lower()

    def execute(self, command: str, *args, **kwargs) -> Any:
        method = getattr(self, f"{self.COMMAND_PREFIX}{command}", None)
        if method is None or not callable(method):
            raise CommandNotFoundError(command, self.cell_name)
        return method(*args, **kwargs)

    def get_commands(self) -> Dict[str, str]:
        commands = {}
        for name in dir(type(self)):
            if name.startswith(self.COMMAND_PREFIX):
                method = getattr(self, name)
                if callable(method):
                    commands[name[len(self.COMMAND_PREFIX):]] = (method.__doc__ or "").strip()
        return commands

    @property
    def event_bus(self):
        return event_bus
