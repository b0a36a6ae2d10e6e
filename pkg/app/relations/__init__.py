# -*- coding: utf-8 -*-
"""
等价关系的表示与分阶段查询
"""

from app.relations.closure import ClassClosure, closure_stage
from app.relations.presentation import (
    RelationPresentation, make_ce_equality, make_ceer, make_decidable, make_delta,
    make_EA, make_e1_ce, make_Fn, make_id, make_oplus, make_times,
)
from app.relations.query import query
from app.relations.saturation import domain_to_range, invariant_closure
from app.relations.verdict import Answer, Certainty, Verdict

__all__ = [
    "ClassClosure", "closure_stage",
    "RelationPresentation", "make_ce_equality", "make_ceer", "make_decidable", "make_delta",
    "make_EA", "make_e1_ce", "make_Fn", "make_id", "make_oplus", "make_times",
    "query", "domain_to_range", "invariant_closure",
    "Answer", "Certainty", "Verdict",
]
