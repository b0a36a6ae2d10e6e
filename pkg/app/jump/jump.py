# -*- coding: utf-8 -*-
"""
跳跃算子 E ↦ E⁺

e E⁺ e′ ⟺ {[φ_e(n)]_E} = {[φ_{e′}(n)]_E}。查询是两个方向 ⊆_E 的合取；
受检一侧使用滞后阶段 ⌊s/4⌋，使得以不同速度枚举同一集合的两个程序趋于相关。
"""

import logging

from app.kernel.enumeration import lag
from app.jump.subset import subset_at_stage
from app.relations.presentation import JumpOf, RelationPresentation
from app.relations.verdict import Verdict, conjoin, related

logger = logging.getLogger(__name__)


def jump(E: RelationPresentation) -> JumpOf:
    return JumpOf(E)


def jump_query(J: JumpOf, m: int, n: int, stage: int) -> Verdict:
    if m == n:
        return related(stage, True)
    back = lag(stage)
    forward = subset_at_stage(m, n, J.inner, stage, tested_stage=back)
    backward = subset_at_stage(n, m, J.inner, stage, tested_stage=back)
    verdict = conjoin(forward, backward, stage)
    logger.debug(f"[JUMP] ({m}, {n}) @ {stage}: {forward.answer}/{backward.answer} -> {verdict.answer}")
    return verdict
