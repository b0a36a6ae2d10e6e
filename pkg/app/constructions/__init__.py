# -*- coding: utf-8 -*-
"""
归约见证的构造、目录与验证
"""

from app.constructions.basic import const_into_jump, map_jump
from app.constructions.hyperarithmetic import MembershipReduction, borel_code_reduction, pi04_reduction
from app.constructions.monotone import MonotoneWitness, monotone_finite_witness
from app.constructions.registry import build, construction_names, summaries
from app.constructions.verify import run_suite, verify, verify_membership
from app.constructions.witness import Report, ReductionWitness

__all__ = [
    "const_into_jump", "map_jump",
    "MembershipReduction", "borel_code_reduction", "pi04_reduction",
    "MonotoneWitness", "monotone_finite_witness",
    "build", "construction_names", "summaries",
    "run_suite", "verify", "verify_membership",
    "Report", "ReductionWitness",
]
