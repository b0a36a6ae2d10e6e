# -*- coding: utf-8 -*-
"""
依赖注入容器
提供服务定位和依赖注入功能
"""

import logging
from abc import ABCMeta
from typing import Any, Callable, Dict, Optional, Type

logger = logging.getLogger(__name__)


def _key(service_type: Type) -> str:
    return f"{service_type.__module__}.{service_type.__name__}"


class DIContainer:
    """依赖注入容器（单例）"""

    _instance: Optional['DIContainer'] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._services: Dict[str, Any] = {}
            cls._instance._singletons: Dict[str, Any] = {}
        return cls._instance

    def register(self, service_type: Type, instance: Any = None, singleton: bool = True):
        """注册服务

        Args:
            service_type: 服务类型
            instance: 预配置实例
            singleton: 是否单例模式
        """
        key = _key(service_type)
        self._services[key] = (instance, singleton, False)
        if instance is not None and singleton:
            self._singletons[key] = instance
        logger.debug(f"[DI] 已注册服务: {service_type.__name__} (singleton={singleton})")

    def register_factory(self, service_type: Type, factory: Callable, singleton: bool = False):
        """注册工厂函数；singleton 为 True 时首次解析后缓存"""
        self._services[_key(service_type)] = (factory, singleton, True)
        logger.debug(f"[DI] 已注册工厂: {service_type.__name__}")

    def resolve(self, service_type: Type) -> Any:
        """解析服务实例"""
        key = _key(service_type)
        if key not in self._services:
            raise ValueError(f"service not registered: {service_type.__name__}")
        if key in self._singletons:
            return self._singletons[key]

        value, is_singleton, is_factory = self._services[key]
        instance = value() if is_factory else value

        if is_singleton:
            self._singletons[key] = instance
        return instance

    def clear(self):
        """清空所有注册"""
        self._services.clear()
        self._singletons.clear()
        logger.debug("[DI] 容器已清空")


_container: Optional[DIContainer] = None


def get_container() -> DIContainer:
    """获取全局容器实例"""
    global _container
    if _container is None:
        _container = DIContainer()
    return _container


class AutoInjectMeta(ABCMeta):
    """把 injected(...) 标记的类属性换成从容器解析的只读属性"""

    def __new__(cls, name, bases, namespace):
        new_namespace = {}
        for key, value in namespace.items():
            if isinstance(value, _InjectMarker):
                service_type = value.service_type
                new_namespace[key] = property(lambda self, st=service_type: get_container().resolve(st))
            else:
                new_namespace[key] = value
        return super().__new__(cls, name, bases, new_namespace)


class _InjectMarker:
    """注入标记类"""

    def __init__(self, service_type: Type):
        self.service_type = service_type


def injected(service_type: Type) -> _InjectMarker:
    """标记属性需要注入

    使用示例:
        class VerifierCell(BaseCell):
            settings = injected(WorkbenchSettings)
            mp_manager = injected(MultiprocessManager)
    """
    return _InjectMarker(service_type)


def setup_di_container(settings=None):
    """注册工作台服务：事件总线、进程池、设置与命令分发器"""
    from app.core.bus.event_bus import EventBus, get_event_bus
    from app.core.handler.message_handler import CommandDispatcher
    from app.core.util.components_loader import WorkbenchSettings, load_settings
    from app.core.util.mp_manager import MultiprocessManager, get_multiprocess_manager

    settings = settings if settings is not None else load_settings()
    container = get_container()
    container.register(EventBus, get_event_bus(), singleton=True)
    container.register(MultiprocessManager, get_multiprocess_manager(), singleton=True)
    container.register(WorkbenchSettings, settings, singleton=True)
    container.register(CommandDispatcher, CommandDispatcher(), singleton=True)

    get_multiprocess_manager().configure(settings.workers if settings.parallel_verify else 0)
    logger.info("[DI] 依赖注入容器初始化完成")
    return container
