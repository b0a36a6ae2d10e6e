# -*- coding: utf-8 -*-
"""
归约见证与验证报告
"""

from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from app.kernel.catalog import I, K, call, ifz, ne
from app.kernel.machine import Halted, evaluate
from app.kernel.numbering import encode
from app.relations.presentation import RelationPresentation, describe

PartnerHint = Callable[[int, int], Iterable[int]]


@dataclass(frozen=True)
class ReductionWitness:
    """φ_{function_index} 应当是 source ≤ target 的归约"""
    function_index: int
    source: RelationPresentation
    target: RelationPresentation
    provenance: str
    notes: Tuple[str, ...] = ()

    def image(self, n: int, fuel: int) -> Optional[int]:
        outcome = evaluate(self.function_index, n, fuel)
        return outcome.value if isinstance(outcome, Halted) else None

    def describe(self) -> Dict[str, Any]:
        return {
            "provenance": self.provenance,
            "function_index": self.function_index,
            "source": describe(self.source),
            "target": describe(self.target),
            "notes": list(self.notes),
        }


def swapped_outputs(w: ReductionWitness, a: int = 0, b: int = 4) -> ReductionWitness:
    """交换 f(a) 与 f(b) 的见证，用于故障注入"""
    swap = ifz(ne(I, K(a)), K(b), ifz(ne(I, K(b)), K(a), I))
    return replace(w, function_index=encode(call(w.function_index, swap)),
                   provenance=f"{w.provenance}+swap({a},{b})")


@dataclass
class Report:
    """验证结果；refutations 非空即为失败"""
    witness: str
    samples: int
    stage: int
    confirmations: int = 0
    trend_agreements: int = 0
    refutations: List[Dict[str, Any]] = field(default_factory=list)
    unknowns: int = 0
    notes: Tuple[str, ...] = ()
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.refutations

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "witness": self.witness,
            "samples": self.samples,
            "confirmations": self.confirmations,
            "refutations": self.refutations,
            "unknowns": self.unknowns,
            "stage": self.stage,
            "trend_agreements": self.trend_agreements,
        }
        if self.notes:
            data["notes"] = list(self.notes)
        if self.extra:
            data["extra"] = self.extra
        return data
