# -*- coding: utf-8 -*-
"""
事件类型定义
使用枚举避免字符串硬编码
"""

from enum import Enum


class EventType(str, Enum):
    """事件类型枚举"""

    # 验证事件
    VERIFY_STARTED = "verify.started"
    VERIFY_REFUTATION = "verify.refutation"
    VERIFY_COMPLETED = "verify.completed"

    # 套件事件
    SUITE_COMPLETED = "suite.completed"

    # 组件事件
    CELL_LOADED = "cell.loaded"

    def __str__(self):
        return self.value
