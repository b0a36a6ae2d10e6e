# -*- coding: utf-8 -*-
"""
静态值域分析
对程序做抽象求值，给出 ran φ_e 的有限上界（可靠但不完备）。
抽象值: TOP（未知）、Fin（有限集合）、Tup（两个抽象分量的配对）。
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, FrozenSet, Optional, Union

from app.kernel.numbering import decode
from app.kernel.pairing import pair, unpair
from app.kernel.recursion import smn
from app.kernel.syntax import (
    Add, Comp, Const, Div, Ident, IfZero, Left, Monus, Pair, Program, Right,
    Smn, Succ, Univ,
)

logger = logging.getLogger(__name__)

FIN_CAP = 512
UNIV_DEPTH = 6


class _Top:
    def __repr__(self) -> str:
        return "TOP"


TOP = _Top()


@dataclass(frozen=True)
class Fin:
    values: FrozenSet[int]


@dataclass(frozen=True)
class Tup:
    first: "Abstract"
    second: "Abstract"


Abstract = Union[_Top, Fin, Tup]

# 已知模板 P：Comp(P, Pair(Const x, Ident)) 的值域由 certifier(x) 给出
_certifiers: Dict[Program, Callable[[int], Optional[FrozenSet[int]]]] = {}


def register_certifier(template: Program, certifier: Callable[[int], Optional[FrozenSet[int]]]) -> None:
    """为形如 smn(template, x) 的程序登记值域证明"""
    _certifiers[template] = certifier
    range_bound.cache_clear()


def _fin(values) -> Abstract:
    values = frozenset(values)
    return Fin(values) if len(values) <= FIN_CAP else TOP


def _concrete(value: Abstract) -> Optional[FrozenSet[int]]:
    if isinstance(value, Fin):
        return value.values
    if isinstance(value, Tup):
        a, b = _concrete(value.first), _concrete(value.second)
        if a is None or b is None or len(a) * len(b) > FIN_CAP:
            return None
        return frozenset(pair(x, y) for x, y in product(a, b))
    return None


def _join(a: Abstract, b: Abstract) -> Abstract:
    if isinstance(a, Tup) and isinstance(b, Tup):
        return Tup(_join(a.first, b.first), _join(a.second, b.second))
    ca, cb = _concrete(a), _concrete(b)
    if ca is None or cb is None:
        return TOP
    return _fin(ca | cb)


def _components(value: Abstract):
    if isinstance(value, Tup):
        return value.first, value.second
    values = _concrete(value)
    if values is None:
        return TOP, TOP
    parts = [unpair(v) for v in values]
    return _fin(p[0] for p in parts), _fin(p[1] for p in parts)


def _binary(value: Abstract, op) -> Abstract:
    if isinstance(value, Tup):
        a, b = _concrete(value.first), _concrete(value.second)
        if a is None or b is None or len(a) * len(b) > FIN_CAP:
            return TOP
        return _fin(op(x, y) for x, y in product(a, b))
    values = _concrete(value)
    if values is None:
        return TOP
    return _fin(op(*unpair(v)) for v in values)


def _abstract(program: Program, arg: Abstract, depth: int) -> Abstract:
    kind = type(program)
    if kind is Ident:
        return arg
    if kind is Const:
        return Fin(frozenset({program.value}))
    if kind is Succ:
        values = _concrete(arg)
        return TOP if values is None else _fin(v + 1 for v in values)
    if kind is Left:
        return _components(arg)[0]
    if kind is Right:
        return _components(arg)[1]
    if kind is Add:
        return _binary(arg, lambda a, b: a + b)
    if kind is Monus:
        return _binary(arg, lambda a, b: max(a - b, 0))
    if kind is Div:
        return _binary(arg, lambda a, b: a // b if b else 0)
    if kind is Pair:
        return Tup(_abstract(program.first, arg, depth), _abstract(program.second, arg, depth))
    if kind is Comp:
        inner = program.inner
        if (program.outer in _certifiers and isinstance(inner, Pair)
                and isinstance(inner.first, Const) and isinstance(inner.second, Ident)):
            certified = _certifiers[program.outer](inner.first.value)
            if certified is not None:
                return _fin(certified)
        return _abstract(program.outer, _abstract(inner, arg, depth), depth)
    if kind is IfZero:
        return _join(_abstract(program.then, arg, depth), _abstract(program.orelse, arg, depth))
    if kind is Univ:
        if depth <= 0:
            return TOP
        indices, inputs = _components(arg)
        values = _concrete(indices)
        if values is None:
            return TOP
        result: Optional[Abstract] = None
        for e in values:
            part = _abstract(decode(e), inputs, depth - 1)
            result = part if result is None else _join(result, part)
            if result is TOP:
                return TOP
        return result if result is not None else Fin(frozenset())
    if kind is Smn:
        return _binary(arg, smn)
    # While 与 Clock
    return TOP


@lru_cache(maxsize=16384)
def range_bound(e: int) -> Optional[FrozenSet[int]]:
    """ran φ_e 的有限上界；无法确定时返回 None"""
    return program_range_bound(decode(e))


def program_range_bound(program: Program) -> Optional[FrozenSet[int]]:
    try:
        return _concrete(_abstract(program, TOP, UNIV_DEPTH))
    except RecursionError:
        # 过深的程序不做分析
        logger.debug("[ANALYSIS] 程序嵌套过深，放弃值域上界")
        return None
