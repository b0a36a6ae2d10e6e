# -*- coding: utf-8 -*-
"""
事件基类
统一事件结构，提供类型安全
"""

from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict

from .events import EventType


@dataclass
class BaseEvent:
    """事件基类"""
    event_type: EventType
    timestamp: float = field(default_factory=lambda: datetime.now().timestamp())
    data: dict = field(default_factory=dict)

    def get(self, key: str, default: Any = None) -> Any:
        """获取事件数据

        Args:
            key: 数据键
            default: 默认值

        Returns:
            数据值
        """
        return self.data.get(key, default)

    def __repr__(self):
        return f"<{self.__class__.__name__} type={self.event_type} data={self.data}>"


@dataclass
class VerifyStartedEvent(BaseEvent):
    """一次验证开始"""

    def __init__(self, witness: str, samples: int, stage: int):
        super().__init__(
            event_type=EventType.VERIFY_STARTED,
            data={"witness": witness, "samples": samples, "stage": stage}
        )

    @property
    def witness(self) -> str:
        return self.data["witness"]


@dataclass
class RefutationEvent(BaseEvent):
    """源与目标的最终判定相互矛盾"""

    def __init__(self, witness: str, refutation: Dict[str, Any]):
        super().__init__(
            event_type=EventType.VERIFY_REFUTATION,
            data={"witness": witness, "refutation": refutation}
        )

    @property
    def witness(self) -> str:
        return self.data["witness"]

    @property
    def refutation(self) -> Dict[str, Any]:
        return self.data["refutation"]


@dataclass
class VerifyCompletedEvent(BaseEvent):
    """一次验证结束"""

    def __init__(self, witness: str, passed: bool, confirmations: int, unknowns: int):
        super().__init__(
            event_type=EventType.VERIFY_COMPLETED,
            data={"witness": witness, "passed": passed,
                  "confirmations": confirmations, "unknowns": unknowns}
        )

    @property
    def passed(self) -> bool:
        return self.data["passed"]


@dataclass
class SuiteCompletedEvent(BaseEvent):
    """套件中的全部条目结束"""

    def __init__(self, suite: str, items: int, failures: int):
        super().__init__(
            event_type=EventType.SUITE_COMPLETED,
            data={"suite": suite, "items": items, "failures": failures}
        )

    @property
    def failures(self) -> int:
        return self.data["failures"]


@dataclass
class CellLoadedEvent(BaseEvent):
    """组件加载完成"""

    def __init__(self, cell_name: str):
        super().__init__(event_type=EventType.CELL_LOADED, data={"cell_name": cell_name})

    @property
    def cell_name(self) -> str:
        return self.data["cell_name"]
