# -*- coding: utf-8 -*-
"""
⊆_E 的分阶段检查

e ⊆_E e′ ⟺ ran φ_e 的每个元素在 ran φ_{e′} 中都有 E-相关的伙伴。
受检一侧取 tested_stage 时已发现的元素（若值域已被证明为有限，则取整个值域），
伙伴在 stage 时的 ran φ_{e′} 中寻找；partner_hint 可为某个输入额外提供
φ_{e′} 的候选输入。
"""

import logging
from typing import Callable, Iterable, List, Optional, Set, Tuple

from app.kernel.enumeration import View, certified_set, stream
from app.kernel.machine import Halted, evaluate
from app.relations.presentation import RelationPresentation
from app.relations.query import query
from app.relations.verdict import Verdict, related, unknown, unrelated

logger = logging.getLogger(__name__)

PartnerHint = Callable[[int, int], Iterable[int]]


def _tested(e: int, stage: int, tested_stage: int) -> Tuple[List[Tuple[int, int]], bool]:
    """(元素, 产生它的输入) 列表，以及它是否是完整的值域"""
    source = stream(e, View.RANGE)
    exact = certified_set(e, stage)
    if exact is not None:
        return [(x, source.source_of(x, stage)) for x in sorted(exact)], True
    return [(d.element, d.source) for d in source.discoveries(tested_stage)], False


def _candidates(e2: int, stage: int, hinted: Iterable[int]) -> Set[int]:
    found = set(stream(e2, View.RANGE).at(stage))
    for k in hinted:
        outcome = evaluate(e2, k, stage)
        if isinstance(outcome, Halted):
            found.add(outcome.value)
    return found


def subset_at_stage(e: int, e2: int, E: RelationPresentation, stage: int,
                    tested_stage: Optional[int] = None,
                    partner_hint: Optional[PartnerHint] = None) -> Verdict:
    """e ⊆_E e2 在阶段 stage 的观测"""
    tested_stage = stage if tested_stage is None else tested_stage
    elements, complete = _tested(e, stage, tested_stage)
    exact_other = certified_set(e2, stage)
    base_candidates = set(stream(e2, View.RANGE).at(stage))

    all_final = True
    missing: List[int] = []
    refuted: List[int] = []
    for x, source in elements:
        hinted = partner_hint(source, x) if partner_hint is not None and source is not None else ()
        candidates = _candidates(e2, stage, hinted) if hinted else base_candidates
        best: Optional[Verdict] = None
        all_unrelated_final = True
        for y in sorted(candidates):
            verdict = query(E, x, y, stage)
            if verdict.related:
                if best is None or (verdict.is_final and not best.is_final):
                    best = verdict
                if verdict.is_final:
                    break
            elif not (verdict.unrelated and verdict.is_final):
                all_unrelated_final = False
        if best is None:
            missing.append(x)
            if exact_other is not None and all_unrelated_final:
                refuted.append(x)
        elif not best.is_final:
            all_final = False

    if refuted:
        return unrelated(stage, True, f"no partner for {refuted[0]} in a certified finite range")
    if missing:
        return unknown(stage, f"missing partners for {len(missing)} element(s)", tuple(missing))
    return related(stage, complete and all_final)


def subset_certified(e: int, e2: int, E: RelationPresentation, stages: Iterable[int],
                     partner_hint: Optional[PartnerHint] = None) -> List[Verdict]:
    """在若干阶段上重复检查 e ⊆_E e2"""
    return [subset_at_stage(e, e2, E, s, partner_hint=partner_hint) for s in stages]


