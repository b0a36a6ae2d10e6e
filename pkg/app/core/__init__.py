# -*- coding: utf-8 -*-
"""
核心模块
按职责分组的子模块：
- bus: 事件总线（EventBus、事件类型、事件模型）
- di: 依赖注入容器
- handler: 命令分发器
- interface: 组件接口与基类
- util: 日志、配置加载、多进程管理
"""

from .exception import WorkbenchError
from .bus.event_bus import event_bus, EventBus
from .bus.events import EventType
from .bus.event_models import BaseEvent
from .util.mp_manager import MultiprocessManager, get_multiprocess_manager
from .di.container import DIContainer, get_container, injected, AutoInjectMeta, setup_di_container

__all__ = [
    'WorkbenchError',
    'event_bus',
    'EventBus',
    'EventType',
    'BaseEvent',
    'MultiprocessManager',
    'get_multiprocess_manager',
    'DIContainer',
    'get_container',
    'injected',
    'AutoInjectMeta',
    'setup_di_container'
]
