# -*- coding: utf-8 -*-
"""
E-饱和
invariant_closure(E, e) 给出 f(e)，使 W_{f(e)} = [ran φ_e]_E。
机器内的搜索：对 n，逐步加倍时间界 t，计算
    CLASS(c, SEEDS(e, t), t)
即 t 步内可见的 ran φ_e 元素在 t 步内可见的边下的闭包，n 出现即停机。
"""

import logging
from typing import FrozenSet, Iterable, Tuple

from app.kernel.catalog import (
    DOMAIN_TO_RANGE, SEEDS, K, L, R, add, call, class_of, falsy, loop, member,
    nth, o, partial_transformer, tup,
)
from app.kernel.numbering import encode
from app.kernel.pairing import pair
from app.kernel.recursion import smn, transformer_of
from app.kernel.syntax import Program
from app.relations.closure import brute_force_closure
from app.relations.presentation import Ceer

logger = logging.getLogger(__name__)


def _saturate() -> Program:
    # 输入 ⟨⟨c, e⟩, n⟩；状态 ⟨c, e, n, t⟩
    c, e, n, t = (nth(i, 4) for i in range(4))
    seeds = call(SEEDS, tup(e, t))
    found = member(n, class_of(c, seeds, t))
    body = tup(c, e, n, add(add(t, t), K(1)))
    start = tup(o(L, L), o(R, L), R, K(1))
    return o(n, loop(falsy(found), body), start)


SATURATE = encode(_saturate())


def invariant_closure(E: Ceer, e: int) -> int:
    """W_{f(e)} = [ran φ_e]_E"""
    return smn(SATURATE, pair(E.pair_enumerator, e))


def invariant_closure_transformer(E: Ceer) -> int:
    """e ↦ invariant_closure(E, e) 的程序编号"""
    return partial_transformer(SATURATE, E.pair_enumerator)


def domain_to_range(e: int) -> int:
    """ran φ_{g(e)} = W_e"""
    return smn(DOMAIN_TO_RANGE, e)


def domain_to_range_transformer() -> int:
    return transformer_of(DOMAIN_TO_RANGE)


def brute_force_saturation(points: Iterable[int], edges: Iterable[Tuple[int, int]],
                           seeds: Iterable[int]) -> FrozenSet[int]:
    """有限数据上直接计算的饱和（用于核对）"""
    seeds = frozenset(seeds)
    result = set()
    for block in brute_force_closure(points, edges):
        if block & seeds:
            result |= block
    return frozenset(result | seeds)
