# -*- coding: utf-8 -*-
"""
事件总线模块
提供发布-订阅模式的事件管理
支持通配符模式、优先级、一次性事件
"""

import fnmatch
import logging
import traceback
from functools import wraps
from typing import Any, Callable, Dict, List, Set, Tuple, Type

from .event_models import (
    BaseEvent, CellLoadedEvent, RefutationEvent, SuiteCompletedEvent, VerifyCompletedEvent,
    VerifyStartedEvent,
)
from .events import EventType

logger = logging.getLogger(__name__)

_EVENT_HANDLERS_REGISTRY: Dict[str, Set[Tuple[Callable, int, Tuple[str, str]]]] = {}


class EventPriority:
    LOWEST = 0
    LOW = 100
    NORMAL = 500
    HIGH = 1000
    HIGHEST = 10000


class EventBus:
    def __init__(self):
        self._subscribers: Dict[str, Dict[int, List[Callable]]] = {}
        self._patterns: List[Tuple[str, int, Callable]] = []
        self._once_subscribers: Dict[str, List[Callable]] = {}
        self._event_classes: Dict[str, Type[BaseEvent]] = {
            str(EventType.VERIFY_STARTED): VerifyStartedEvent,
            str(EventType.VERIFY_REFUTATION): RefutationEvent,
            str(EventType.VERIFY_COMPLETED): VerifyCompletedEvent,
            str(EventType.SUITE_COMPLETED): SuiteCompletedEvent,
            str(EventType.CELL_LOADED): CellLoadedEvent,
        }

    def subscribe(self, event_type: EventType, handler: Callable, priority: int = EventPriority.NORMAL):
        by_priority = self._subscribers.setdefault(str(event_type), {})
        handlers = by_priority.setdefault(priority, [])
        if handler not in handlers:
            handlers.append(handler)
        logger.debug(f"[EVENT] 已订阅事件: {event_type} (优先级: {priority}) -> {handler.__name__}")

    def subscribe_pattern(self, pattern: str, handler: Callable, priority: int = EventPriority.NORMAL):
        if (pattern, priority, handler) not in self._patterns:
            self._patterns.append((pattern, priority, handler))
            self._patterns.sort(key=lambda item: item[1], reverse=True)
        logger.debug(f"[EVENT] 已订阅模式事件: {pattern} (优先级: {priority}) -> {handler.__name__}")

    def subscribe_once(self, event_type: EventType, handler: Callable):
        self._once_subscribers.setdefault(str(event_type), []).append(handler)

    def unsubscribe(self, event_type: EventType, handler: Callable = None):
        event_name = str(event_type)
        if handler is None:
            self._subscribers.pop(event_name, None)
            self._once_subscribers.pop(event_name, None)
        else:
            for handlers in self._subscribers.get(event_name, {}).values():
                if handler in handlers:
                    handlers.remove(handler)
        logger.debug(f"[EVENT] 已取消订阅事件: {event_type}")

    @staticmethod
    def _match_pattern(event_name: str, pattern: str) -> bool:
        return pattern == "*" or fnmatch.fnmatchcase(event_name, pattern)

    def _get_sorted_handlers(self, event_name: str) -> List[Callable]:
        handlers: List[Callable] = []
        by_priority = self._subscribers.get(event_name, {})
        for priority in sorted(by_priority, reverse=True):
            handlers.extend(h for h in by_priority[priority] if h not in handlers)
        return handlers

    def _create_event(self, event_name: str, args: tuple, kwargs: dict) -> Any:
        """统一创建事件对象"""
        if args and isinstance(args[0], BaseEvent):
            return args[0]
        event_class = self._event_classes.get(event_name)
        if event_class is None:
            return None
        try:
            return event_class(*args, **kwargs)
        except TypeError as e:
            logger.warning(f"[EVENT] 创建事件对象失败: {e}")
            return None

    @staticmethod
    def _invoke(handler: Callable, event_name: str, event: Any, args: tuple, kwargs: dict) -> Any:
        if event is not None:
            return handler(event)
        return handler(event_name, *args, **kwargs)

    def publish(self, event_type: EventType, *args, **kwargs):
        event_name = str(event_type)
        event = self._create_event(event_name, args, kwargs)
        handlers = self._get_sorted_handlers(event_name)
        handlers += [h for pattern, _, h in self._patterns if self._match_pattern(event_name, pattern)]
        handlers += self._once_subscribers.pop(event_name, [])
        result = None
        for handler in handlers:
            try:
                result = self._invoke(handler, event_name, event, args, kwargs)
            except Exception as e:
                logger.error(f"[EVENT] 事件处理器错误 [{event_name}]: {e}")
                logger.debug(f"[EVENT] 堆栈跟踪: {traceback.format_exc()}")
        return result

    def has_subscribers(self, event_type: EventType) -> bool:
        return bool(self._get_sorted_handlers(str(event_type)))

    def get_subscribers_count(self, event_type: EventType) -> int:
        return len(self._get_sorted_handlers(str(event_type)))

    def clear(self):
        self._subscribers.clear()
        self._patterns.clear()
        self._once_subscribers.clear()
        logger.info("[EVENT] 已清空所有事件订阅")


def _handler_key(func: Callable) -> Tuple[str, str]:
    return func.__qualname__, func.__module__


def event(event_type: str, priority: int = EventPriority.NORMAL):
    """把组件方法登记为事件处理器，由 register_component_handlers 绑定"""
    def decorator(func):
        @wraps(func)
        def wrapper(self, *args, **kwargs):
            return func(self, *args, **kwargs)

        _EVENT_HANDLERS_REGISTRY.setdefault(str(event_type), set()).add((wrapper, priority, _handler_key(func)))
        logger.debug(f"[EVENT] 已注册事件处理器: {event_type} (优先级: {priority}) -> {func.__name__}")
        return wrapper
    return decorator


def _owned_by(handler_key: Tuple[str, str], instance: Any) -> bool:
    qualname, module = handler_key
    return qualname.split('.')[0] == type(instance).__name__ and module == type(instance).__module__


def register_component_handlers(component_instance: Any, bus: "EventBus" = None):
    """把组件上以 @event 标记的方法绑定到总线"""
    bus = bus or event_bus
    registered = getattr(component_instance, "_event_handlers_bound", None)
    if registered is bus:
        logger.warning(f"[EVENT] {type(component_instance).__name__} 已经注册过事件处理器，跳过")
        return
    for event_type, handlers in _EVENT_HANDLERS_REGISTRY.items():
        for handler, priority, key in handlers:
            if _owned_by(key, component_instance):
                bus.subscribe(event_type, handler.__get__(component_instance, type(component_instance)), priority)
    component_instance._event_handlers_bound = bus
    logger.debug(f"[EVENT] 已绑定 {type(component_instance).__name__} 的事件处理器")


event_bus = EventBus()


def get_event_bus() -> EventBus:
    return event_bus
