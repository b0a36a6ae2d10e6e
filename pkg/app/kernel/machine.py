# -*- coding: utf-8 -*-
"""
带燃料的求值器

一个燃料单位 = 一次节点求值（While 每轮另计一次）。求值是确定的，
并且关于燃料单调：若 eval(e, n, f) 停机为 (v, s)，则任何 f' ≥ f 都得到同一结果。
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

from app.kernel.numbering import decode
from app.kernel.pairing import pair, unpair
from app.kernel.recursion import smn
from app.kernel.syntax import (
    Add, Clock, Comp, Const, Div, Ident, IfZero, Left, Monus, Pair, Program,
    Right, Smn, Succ, Univ, While,
)

logger = logging.getLogger(__name__)

# 超过该位宽的中间值使本次运行停止（在任何燃料下都报告为 OutOfFuel）
MAX_VALUE_BITS = 1 << 20


@dataclass(frozen=True)
class Halted:
    value: int
    steps: int

    @property
    def halted(self) -> bool:
        return True


@dataclass(frozen=True)
class OutOfFuel:
    fuel: int

    @property
    def halted(self) -> bool:
        return False


Outcome = Union[Halted, OutOfFuel]


class _Exhausted(Exception):
    pass


class _Stuck(Exception):
    pass


class _Run:
    __slots__ = ("remaining",)

    def __init__(self, fuel: int):
        self.remaining = fuel


def _checked(value: int) -> int:
    if value.bit_length() > MAX_VALUE_BITS:
        raise _Stuck()
    return value


# 续延帧标记
_PAIR_SECOND, _PAIR_DONE, _COMP, _IFZERO, _WHILE_TEST, _WHILE_BODY, _CLOCK = range(7)


def _unwind(stack: list, run: _Run) -> Tuple[_Run, int]:
    """run 燃料耗尽：弹出帧直到某个 Clock 接住（该 Clock 返回 0），否则整体耗尽"""
    while stack:
        frame = stack.pop()
        if frame[0] != _CLOCK:
            continue
        _, outer, _inner, budget, t = frame
        if budget < t:
            # 外层燃料不足以跑满 t 步，外层一并耗尽
            outer.remaining = -1
            run = outer
            continue
        outer.remaining -= t
        return outer, 0
    raise _Exhausted()


def _ev(run: _Run, program: Program, x: int) -> int:
    """显式栈求值；节点入口处计一次燃料"""
    stack: list = []
    node: Optional[Program] = program
    value = 0
    while True:
        if node is not None:
            run.remaining -= 1
            if run.remaining < 0:
                run, value = _unwind(stack, run)
                node = None
                continue
            kind = type(node)
            if kind is Ident:
                value = x
            elif kind is Const:
                value = node.value
            elif kind is Succ:
                value = x + 1
            elif kind is Left:
                value = unpair(x)[0]
            elif kind is Right:
                value = unpair(x)[1]
            elif kind is Add:
                a, b = unpair(x)
                value = _checked(a + b)
            elif kind is Monus:
                a, b = unpair(x)
                value = a - b if a > b else 0
            elif kind is Div:
                a, b = unpair(x)
                value = a // b if b else 0
            elif kind is Pair:
                stack.append((_PAIR_SECOND, node, x))
                node = node.first
                continue
            elif kind is Comp:
                stack.append((_COMP, node))
                node = node.inner
                continue
            elif kind is IfZero:
                stack.append((_IFZERO, node, x))
                node = node.test
                continue
            elif kind is While:
                stack.append((_WHILE_TEST, node, x))
                node = node.test
                continue
            elif kind is Univ:
                e, x = unpair(x)
                node = decode(e)
                continue
            elif kind is Clock:
                e, rest = unpair(x)
                x, t = unpair(rest)
                budget = min(t, run.remaining)
                inner = _Run(budget)
                stack.append((_CLOCK, run, inner, budget, t))
                run = inner
                node = decode(e)
                continue
            elif kind is Smn:
                e, arg = unpair(x)
                value = smn(e, arg)
            else:
                raise TypeError(f"not a program node: {node!r}")
            node = None

        # 把 value 交给最近的续延帧
        if not stack:
            return value
        frame = stack.pop()
        tag = frame[0]
        if tag == _PAIR_SECOND:
            _, parent, x = frame
            stack.append((_PAIR_DONE, value))
            node = parent.second
        elif tag == _PAIR_DONE:
            value = _checked(pair(frame[1], value))
        elif tag == _COMP:
            x = value
            node = frame[1].outer
        elif tag == _IFZERO:
            _, parent, x = frame
            node = parent.then if value == 0 else parent.orelse
        elif tag == _WHILE_TEST:
            _, parent, x = frame
            if value == 0:
                value = x
                continue
            run.remaining -= 1
            if run.remaining < 0:
                run, value = _unwind(stack, run)
                continue
            stack.append((_WHILE_BODY, parent))
            node = parent.body
        elif tag == _WHILE_BODY:
            parent = frame[1]
            x = value
            stack.append((_WHILE_TEST, parent, x))
            node = parent.test
        else:
            _, outer, inner, budget, _t = frame
            outer.remaining -= budget - inner.remaining
            run = outer
            value = _checked(value + 1)


# (index, input) → 已知停机结果，或已知失败的最大燃料
_halted: Dict[Tuple[int, int], Halted] = {}
_starved: Dict[Tuple[int, int], int] = {}
_CACHE_LIMIT = 1 << 18


def run_program(program: Program, n: int, fuel: int) -> Outcome:
    """对未编号的程序求值"""
    if n < 0 or fuel < 0:
        raise ValueError(f"input and fuel must be naturals, got n={n}, fuel={fuel}")
    run = _Run(fuel)
    try:
        value = _ev(run, program, n)
    except (_Exhausted, _Stuck):
        return OutOfFuel(fuel)
    return Halted(value, fuel - run.remaining)


def evaluate(e: int, n: int, fuel: int) -> Outcome:
    """eval(e, n, fuel)：在燃料上限内运行 φ_e(n)"""
    key = (e, n)
    known = _halted.get(key)
    if known is not None:
        return known if known.steps <= fuel else OutOfFuel(fuel)
    if _starved.get(key, -1) >= fuel:
        return OutOfFuel(fuel)
    outcome = run_program(decode(e), n, fuel)
    if len(_halted) + len(_starved) > _CACHE_LIMIT:
        _halted.clear()
        _starved.clear()
    if isinstance(outcome, Halted):
        _halted[key] = outcome
        _starved.pop(key, None)
    else:
        _starved[key] = fuel
    return outcome


def clear_cache() -> None:
    _halted.clear()
    _starved.clear()
