# -*- coding: utf-8 -*-
"""
分阶段查询
query(E, m, n, stage) 返回三值判定；结果只依赖 (表示, m, n, stage)，因而可缓存。
"""

import logging
from functools import lru_cache
from typing import Dict, FrozenSet, Optional, Tuple

from app.core.exception import UnsupportedPresentationError
from app.kernel.enumeration import View, certified_set, lag, set_at
from app.kernel.machine import Halted, evaluate
from app.kernel.pairing import pair, unpair
from app.relations.closure import closure_stage
from app.relations.presentation import (
    EA, Ceer, CeRestriction, ColumnRelation, Decidable, FiniteId, JumpOf,
    LimitIterate, Product, RelationPresentation, SetRelation, Sum,
)
from app.relations.verdict import Verdict, conjoin, related, unknown, unrelated

logger = logging.getLogger(__name__)


def _decidable(E: Decidable, m: int, n: int, stage: int) -> Verdict:
    outcome = evaluate(E.decider, pair(m, n), stage)
    if isinstance(outcome, Halted):
        return related(stage, True) if outcome.value else unrelated(stage, True)
    return unknown(stage, "decider out of fuel")


def _finite_id(E: FiniteId, m: int, n: int, stage: int) -> Verdict:
    top = E.k - 1
    return related(stage, True) if min(m, top) == min(n, top) else unrelated(stage, True)


def _ea(E: EA, m: int, n: int, stage: int) -> Verdict:
    if m == n:
        return related(stage, True)
    members = set_at(E.a_enumerator, stage)
    if m in members and n in members:
        return related(stage, True)
    exact = certified_set(E.a_enumerator, stage)
    return unrelated(stage, exact is not None, "not both seen in A")


def _ceer(E: Ceer, m: int, n: int, stage: int) -> Verdict:
    if closure_stage(E.pair_enumerator, stage).same(m, n):
        return related(stage, True)
    exact = certified_set(E.pair_enumerator, stage)
    return unrelated(stage, exact is not None, "not yet merged")


def _sum(E: Sum, m: int, n: int, stage: int) -> Verdict:
    (a, ta), (b, tb) = unpair(m), unpair(n)
    side_a, side_b = min(ta, 1), min(tb, 1)
    if side_a != side_b:
        return unrelated(stage, True, "different summands")
    return query(E.right if side_a else E.left, a, b, stage)


def _product(E: Product, m: int, n: int, stage: int) -> Verdict:
    (a1, a2), (b1, b2) = unpair(m), unpair(n)
    return conjoin(query(E.left, a1, b1, stage), query(E.right, a2, b2, stage), stage)


def columns(values: FrozenSet[int]) -> Dict[int, FrozenSet[int]]:
    """A_(k) = {p : ⟨k,p⟩ ∈ A}，只列出非空的列"""
    result: Dict[int, set] = {}
    for value in values:
        k, p = unpair(value)
        result.setdefault(k, set()).add(p)
    return {k: frozenset(v) for k, v in result.items()}


def exact_equivalent(level: int, a: FrozenSet[int], b: FrozenSet[int]) -> bool:
    """有限集合上的 F_level（有限集合的列族中还包含 ∅）"""
    if level == 1:
        return a == b
    ca, cb = list(columns(a).values()), list(columns(b).values())
    return (all(any(exact_equivalent(level - 1, x, y) for y in cb) for x in ca)
            and all(any(exact_equivalent(level - 1, y, x) for x in ca) for y in cb))


def lagged_equivalent(level: int, a_lag: FrozenSet[int], a_now: FrozenSet[int],
                      b_lag: FrozenSet[int], b_now: FrozenSet[int]) -> bool:
    """滞后比较：一侧在滞后阶段见到的内容，另一侧在当前阶段都已出现"""
    if level == 1:
        return a_lag <= b_now and b_lag <= a_now
    lag_a, now_a = columns(a_lag), columns(a_now)
    lag_b, now_b = columns(b_lag), columns(b_now)

    def covered(lag_x, now_x, lag_y, now_y) -> bool:
        return all(
            any(lagged_equivalent(level - 1, col, now_x.get(k, col), lag_y.get(j, frozenset()), now_y[j])
                for j in now_y)
            for k, col in lag_x.items()
        )

    return covered(lag_a, now_a, lag_b, now_b) and covered(lag_b, now_b, lag_a, now_a)


def _sets(m: int, n: int, stage: int, view: View, level: int) -> Verdict:
    if m == n:
        return related(stage, True)
    exact_m, exact_n = certified_set(m, stage, view), certified_set(n, stage, view)
    if exact_m is not None and exact_n is not None:
        same = exact_equivalent(level, exact_m, exact_n)
        return related(stage, True) if same else unrelated(stage, True, "finite sets differ")
    back = lag(stage)
    same = lagged_equivalent(level, set_at(m, back, view), set_at(m, stage, view),
                             set_at(n, back, view), set_at(n, stage, view))
    return related(stage, False) if same else unrelated(stage, False, "enumerations disagree")


def _ce_restriction(E: CeRestriction, m: int, n: int, stage: int) -> Verdict:
    if E.base is not SetRelation.EQUALITY:
        raise UnsupportedPresentationError(f"{E.base}^ce", "only equality is queryable")
    return _sets(m, n, stage, E.view, 1)


def _column_relation(E: ColumnRelation, m: int, n: int, stage: int) -> Verdict:
    return _sets(m, n, stage, E.view, E.n)


def _jump(E: JumpOf, m: int, n: int, stage: int) -> Verdict:
    from app.jump.jump import jump_query
    return jump_query(E, m, n, stage)


def _limit(E: LimitIterate, m: int, n: int, stage: int) -> Verdict:
    from app.jump.iterate import limit_query
    return limit_query(E, m, n, stage)


_HANDLERS = {
    Decidable: _decidable, FiniteId: _finite_id, EA: _ea, Ceer: _ceer,
    Sum: _sum, Product: _product, CeRestriction: _ce_restriction,
    ColumnRelation: _column_relation, JumpOf: _jump, LimitIterate: _limit,
}


@lru_cache(maxsize=1 << 16)
def query(E: RelationPresentation, m: int, n: int, stage: int) -> Verdict:
    """E 在阶段 stage 对 (m, n) 的判定"""
    if m < 0 or n < 0 or stage < 0:
        raise ValueError(f"query arguments must be naturals, got ({m}, {n}, {stage})")
    handler = _HANDLERS.get(type(E))
    if handler is None:
        raise TypeError(f"not a relation presentation: {E!r}")
    verdict = handler(E, m, n, stage)
    logger.debug(f"[QUERY] {type(E).__name__} ({m}, {n}) @ {stage} -> {verdict.answer}/{verdict.certainty}")
    return verdict


def clear_caches() -> None:
    query.cache_clear()
