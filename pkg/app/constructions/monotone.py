# -*- coding: utf-8 -*-
"""
=^ce-不变变换的内正则见证

给定 =^ce-不变的 f、编号 e 与 x ∈ W_{f(e)}，用递归定理构造 e′：
在输入 n 上反复模拟 e(n)，同时模拟 f(e′)(x)。若某一时刻 t ≥ n 时 e(n) 已停机
而 f(e′)(x) 尚未停机，则 e′ 停机。于是 W_{e′} ⊆ W_e 有限，且 x ∈ W_{f(e′)}。
"""

import logging
from dataclasses import dataclass
from typing import Dict, List

from app.core.exception import MonotoneWitnessError
from app.kernel.catalog import (
    UNION_DOMAIN, I, K, L, R, Pair, apply, clock, curry, falsy, guard, ifz, loop, lt, ne,
    nth, o, partial_transformer, pred, succ, tup,
)
from app.kernel.enumeration import View, set_at
from app.kernel.machine import Halted, evaluate
from app.kernel.numbering import encode
from app.kernel.pairing import tuple_code
from app.kernel.recursion import IDENT_INDEX, fix, transformer_of

logger = logging.getLogger(__name__)


def _finite_witness():
    # ⟨⟨⟨f, ⟨e, x⟩⟩, z⟩, n⟩；状态 ⟨fz, e, x, n, t⟩，fz = φ_f(z)
    fz, e, x, n, t = (nth(i, 5) for i in range(5))
    pending = ifz(clock(e, n, t), K(1), ifz(lt(t, n), ifz(clock(fz, x, t), K(0), K(1)), K(1)))
    params = o(L, L)
    start = tup(apply(o(L, params), o(R, L)), o(L, R, params), o(R, R, params), R, K(0))
    return o(n, loop(pending, tup(fz, e, x, n, succ(t))), start)


FINITE_WITNESS = encode(_finite_witness())


@dataclass(frozen=True)
class MonotoneWitness:
    """e′ 以及构造它的 (f, e, x)"""
    index: int
    f: int
    e: int
    x: int

    def describe(self) -> Dict[str, object]:
        return {"index": self.index, "f": self.f, "e": self.e, "x": self.x}

    def domain(self, stage: int) -> frozenset:
        return set_at(self.index, stage, View.DOMAIN)

    def check(self, stage: int, fuel: int = 100_000) -> Dict[str, object]:
        """W_{e′} ⊆ W_e、x ∈ W_{f(e′)}，并且 W_{e′} 的元素都小于 f(e′)(x) 的停机步数"""
        mine = self.domain(stage)
        theirs = set_at(self.e, 4 * stage, View.DOMAIN)
        image = evaluate(self.f, self.index, fuel)
        run = evaluate(image.value, self.x, fuel) if isinstance(image, Halted) else image
        bound = run.steps if isinstance(run, Halted) else None
        return {
            "subset": mine <= theirs,
            "contains_x": bound is not None,
            "bound": bound,
            "finite": bound is not None and all(n < bound for n in mine),
            "domain": sorted(mine),
        }


def monotone_finite_witness(f: int, e: int, x: int, fuel: int = 100_000) -> MonotoneWitness:
    """f 须为 =^ce-不变；x ∈ W_{f(e)} 须在 fuel 内得到确认"""
    image = evaluate(f, e, fuel)
    if not isinstance(image, Halted):
        raise MonotoneWitnessError("f(e) did not halt within fuel", f=f, e=e)
    if not isinstance(evaluate(image.value, x, fuel), Halted):
        raise MonotoneWitnessError("x is not certified in W_f(e) at fuel", f=f, e=e, x=x)
    index = fix(partial_transformer(FINITE_WITNESS, tuple_code(f, e, x)))
    logger.info(f"[CONSTRUCT] monotone witness for f={f}, e={e}, x={x} -> {index}")
    return MonotoneWitness(index, f, e, x)


# ---------------------------------------------------------------- 单调变换目录

def _only(value: int) -> int:
    """W = {value}"""
    return encode(guard(ne(I, K(value)), K(0)))


def union_with(value: int) -> int:
    """W_{f(e)} = W_e ∪ {value}"""
    return encode(curry(K(UNION_DOMAIN), Pair(I, K(_only(value)))))


# ⟨e, y⟩ 停机当且仅当 y ≥ 1 且 y − 1 ∈ W_e
SHIFT = encode(guard(falsy(R), apply(L, pred(R))))


def monotone_catalog() -> Dict[str, int]:
    """名称 → 变换编号；每个都是 =^ce-不变的"""
    return {
        "identity": IDENT_INDEX,
        "prepend-0": union_with(0),
        "union-7": union_with(7),
        "shift": transformer_of(SHIFT),
    }


def catalog_names() -> List[str]:
    return sorted(monotone_catalog())
