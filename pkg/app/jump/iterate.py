# -*- coding: utf-8 -*-
"""
有限与超限迭代
E^{+1} = E⁺，E^{+(n+1)} = (E^{+n})⁺；超限情形沿记号展开：
One ↦ E，Succ(b) ↦ (E^{+b})⁺，Lim(e) ↦ 按列 m 取 E^{+φ_e(m)}（查询时才展开）。
"""

import logging

from app.core.exception import NotationError
from app.jump.notation import Limit, Notation, One, Successor, from_compact
from app.kernel.machine import Halted, evaluate
from app.kernel.pairing import unpair
from app.relations.presentation import JumpOf, LimitIterate, RelationPresentation
from app.relations.query import query
from app.relations.verdict import Verdict, unknown, unrelated

logger = logging.getLogger(__name__)


def iterate_jump_finite(E: RelationPresentation, n: int) -> RelationPresentation:
    if n < 1:
        raise ValueError(f"finite iterate needs n >= 1, got {n}")
    for _ in range(n):
        E = JumpOf(E)
    return E


def iterate_jump_transfinite(E: RelationPresentation, a: Notation) -> RelationPresentation:
    layers = 0
    while isinstance(a, Successor):
        layers += 1
        a = a.base
    if isinstance(a, Limit):
        E = LimitIterate(E, a.sequence)
    elif not isinstance(a, One):
        raise NotationError(f"not a notation: {a!r}")
    for _ in range(layers):
        E = JumpOf(E)
    return E


def limit_query(E: LimitIterate, m: int, n: int, stage: int) -> Verdict:
    (col_m, x), (col_n, y) = unpair(m), unpair(n)
    if col_m != col_n:
        return unrelated(stage, True, "different columns")
    outcome = evaluate(E.sequence, col_m, stage)
    if not isinstance(outcome, Halted):
        return unknown(stage, f"column {col_m} notation not yet computed")
    component = iterate_jump_transfinite(E.base, from_compact(outcome.value))
    return query(component, x, y, stage)
