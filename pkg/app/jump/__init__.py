# -*- coding: utf-8 -*-
"""
跳跃算子、⊆_E 检查与迭代
"""

from app.jump.iterate import iterate_jump_finite, iterate_jump_transfinite
from app.jump.jump import jump
from app.jump.notation import Limit, Notation, One, Successor, notation_add, notation_lim, notation_succ
from app.jump.subset import subset_at_stage

__all__ = [
    "iterate_jump_finite", "iterate_jump_transfinite", "jump",
    "Limit", "Notation", "One", "Successor", "notation_add", "notation_lim", "notation_succ",
    "subset_at_stage",
]
