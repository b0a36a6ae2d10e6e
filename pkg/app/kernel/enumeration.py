# -*- coding: utf-8 -*-
"""
分阶段枚举
第 s 阶段运行输入 x < √s，输入 x 的燃料为 s // (x+1)。
若输入 x 用 t 步停机，其发现阶段为 max((x+1)², t·(x+1))。
阶段越大，发现的元素只增不减；一个阶段的总工作量约为 s·ln√s 步。
"""

import logging
from collections import OrderedDict
from dataclasses import dataclass, field
from enum import Enum
from math import isqrt
from typing import Dict, FrozenSet, Iterator, Optional, Tuple

from app.kernel.analysis import range_bound
from app.kernel.machine import Halted, evaluate

logger = logging.getLogger(__name__)


class View(str, Enum):
    """以程序编码集合的两种方式"""
    DOMAIN = "domain"
    RANGE = "range"

    def __str__(self) -> str:
        return self.value


def fuel_at(x: int, stage: int) -> int:
    """输入 x 在阶段 stage 可用的燃料；不可用时为 -1"""
    if x > max_input(stage):
        return -1
    return stage // (x + 1)


def max_input(stage: int) -> int:
    """阶段 stage 内运行的最大输入（不存在时为 -1）"""
    return isqrt(max(stage, 0)) - 1


def discovery_stage(x: int, steps: int) -> int:
    """输入 x 用 steps 步停机时，结果首次出现的阶段"""
    return max((x + 1) ** 2, steps * (x + 1))


@dataclass(frozen=True)
class Discovery:
    element: int
    stage: int
    source: int


@dataclass
class StageStream:
    """某个编号在 DOMAIN 或 RANGE 视角下的分阶段近似"""
    index: int
    view: View = View.RANGE
    _found: Dict[int, Discovery] = field(default_factory=dict, repr=False)
    _stage: int = field(default=0, repr=False)

    def advance(self, stage: int) -> None:
        if stage <= self._stage:
            return
        for x in range(max_input(stage) + 1):
            fuel = fuel_at(x, stage)
            outcome = evaluate(self.index, x, fuel)
            if not isinstance(outcome, Halted):
                continue
            element = x if self.view is View.DOMAIN else outcome.value
            found_at = discovery_stage(x, outcome.steps)
            known = self._found.get(element)
            if known is None or found_at < known.stage:
                self._found[element] = Discovery(element, found_at, x)
        self._stage = stage

    def discoveries(self, stage: int) -> Tuple[Discovery, ...]:
        """阶段 stage 已发现的元素，按 (发现阶段, 元素) 排序"""
        self.advance(stage)
        found = [d for d in self._found.values() if d.stage <= stage]
        return tuple(sorted(found, key=lambda d: (d.stage, d.element)))

    def at(self, stage: int) -> FrozenSet[int]:
        return frozenset(d.element for d in self.discoveries(stage))

    def source_of(self, element: int, stage: int) -> Optional[int]:
        """产生该元素的输入（若已发现）"""
        self.advance(stage)
        found = self._found.get(element)
        return found.source if found is not None and found.stage <= stage else None


STREAM_CACHE_SIZE = 4096
_streams: "OrderedDict[Tuple[int, View], StageStream]" = OrderedDict()


def stream(index: int, view: View = View.RANGE) -> StageStream:
    """共享的分阶段流（按 (编号, 视角) 缓存，超出 STREAM_CACHE_SIZE 时淘汰最久未用的）"""
    key = (index, View(view))
    found = _streams.get(key)
    if found is not None:
        _streams.move_to_end(key)
        return found
    found = _streams[key] = StageStream(index, View(view))
    if len(_streams) > STREAM_CACHE_SIZE:
        _streams.popitem(last=False)
    return found


def enumerate_W(e: int, stage: int) -> Iterator[Discovery]:
    """W_e = dom φ_e 在阶段 stage 的发现序列"""
    return iter(stream(e, View.DOMAIN).discoveries(stage))


def enumerate_range(e: int, stage: int) -> Iterator[Discovery]:
    """ran φ_e 在阶段 stage 的发现序列"""
    return iter(stream(e, View.RANGE).discoveries(stage))


def set_at(e: int, stage: int, view: View = View.RANGE) -> FrozenSet[int]:
    return stream(e, view).at(stage)


def certified_set(e: int, stage: int, view: View = View.RANGE) -> Optional[FrozenSet[int]]:
    """若该集合已被静态上界完全覆盖，返回精确的有限集合"""
    if View(view) is not View.RANGE:
        return None
    bound = range_bound(e)
    if bound is None:
        return None
    found = set_at(e, stage, view)
    return found if bound <= found else None


def lag(stage: int) -> int:
    """比较两侧枚举时，受检一侧使用的滞后阶段"""
    return max(stage, 0) // 4


def clear_streams() -> None:
    _streams.clear()
