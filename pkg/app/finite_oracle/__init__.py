# -*- coding: utf-8 -*-
"""
有限对照
"""

from app.finite_oracle.partition import (
    FinitePartition, FiniteReduction, embed_finite, finite_bireducible, finite_jump,
    finite_oplus, finite_reducible, finite_times,
)

__all__ = [
    "FinitePartition", "FiniteReduction", "embed_finite", "finite_bireducible",
    "finite_jump", "finite_oplus", "finite_reducible", "finite_times",
]
