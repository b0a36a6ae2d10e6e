# -*- coding: utf-8 -*-
"""
有限划分与穷举判定
在 {0..k-1} 上给出跳跃、可归约性等事实的有限版本，作为测试的对照
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from app.core.exception import FiniteOracleError
from app.kernel.catalog import K, L, R, ifz, ne, o, table_program
from app.kernel.numbering import encode
from app.relations.presentation import Decidable

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 6
JUMP_BLOCK_LIMIT = 12


def _canonical(assignment: Iterable[int]) -> Tuple[int, ...]:
    ids: Dict[int, int] = {}
    return tuple(ids.setdefault(b, len(ids)) for b in assignment)


@dataclass(frozen=True)
class FinitePartition:
    """{0..k-1} 的划分，block[i] 为元素 i 所在类的编号（按首次出现从 0 连续编号）"""
    blocks: Tuple[int, ...]

    def __post_init__(self):
        if tuple(self.blocks) != _canonical(self.blocks):
            raise FiniteOracleError("block ids must be canonical", blocks=list(self.blocks))

    @classmethod
    def of(cls, assignment: Iterable[int]) -> "FinitePartition":
        return cls(_canonical(assignment))

    @classmethod
    def delta(cls, k: int) -> "FinitePartition":
        return cls(tuple(range(k)))

    @property
    def carrier_size(self) -> int:
        return len(self.blocks)

    @property
    def block_count(self) -> int:
        return max(self.blocks) + 1 if self.blocks else 0

    def related(self, x: int, y: int) -> bool:
        return self.blocks[x] == self.blocks[y]

    def classes(self) -> List[FrozenSet[int]]:
        groups: Dict[int, set] = {}
        for x, b in enumerate(self.blocks):
            groups.setdefault(b, set()).add(x)
        return [frozenset(groups[b]) for b in sorted(groups)]

    def class_family(self, elements: Iterable[int]) -> int:
        """元素集合所触及的类，以类编号位掩码表示"""
        mask = 0
        for x in elements:
            mask |= 1 << self.blocks[x]
        return mask

    def to_dict(self) -> dict:
        return {"carrier_size": self.carrier_size, "blocks": list(self.blocks)}


def finite_jump(P: FinitePartition) -> FinitePartition:
    """载体为 P 的类集合的全部子集（位掩码次序，含空集），每个子集自成一类"""
    n = P.block_count
    if n > JUMP_BLOCK_LIMIT:
        raise FiniteOracleError(f"finite jump limited to {JUMP_BLOCK_LIMIT} blocks", blocks=n)
    return FinitePartition(tuple(range(1 << n)))


@dataclass(frozen=True)
class FiniteReduction:
    reducible: bool
    witness: Optional[Tuple[int, ...]] = None
    exhaustive: bool = False

    def __bool__(self) -> bool:
        return self.reducible

    def to_dict(self) -> dict:
        return {"reducible": self.reducible,
                "witness": list(self.witness) if self.witness is not None else None,
                "exhaustive": self.exhaustive}


def is_reduction(P: FinitePartition, Q: FinitePartition, f: Sequence[int]) -> bool:
    k = P.carrier_size
    return all(P.related(x, y) == Q.related(f[x], f[y])
               for x in range(k) for y in range(x + 1, k))


def _criterion(P: FinitePartition, Q: FinitePartition) -> FiniteReduction:
    if P.block_count > Q.block_count:
        return FiniteReduction(False)
    first = {b: Q.blocks.index(b) for b in range(Q.block_count)}
    return FiniteReduction(True, tuple(first[b] for b in P.blocks))


def finite_reducible(P: FinitePartition, Q: FinitePartition) -> FiniteReduction:
    """P ≤ Q；两侧载体都不超过 EXHAUSTIVE_LIMIT 时穷举所有映射"""
    if P.carrier_size == 0:
        return FiniteReduction(True, (), True)
    if Q.carrier_size == 0:
        return FiniteReduction(False, None, True)
    if P.carrier_size > EXHAUSTIVE_LIMIT or Q.carrier_size > EXHAUSTIVE_LIMIT:
        return _criterion(P, Q)
    for f in itertools.product(range(Q.carrier_size), repeat=P.carrier_size):
        if is_reduction(P, Q, f):
            return FiniteReduction(True, tuple(f), True)
    return FiniteReduction(False, None, True)


def finite_bireducible(P: FinitePartition, Q: FinitePartition) -> bool:
    return bool(finite_reducible(P, Q)) and bool(finite_reducible(Q, P))


def finite_oplus(P: FinitePartition, Q: FinitePartition) -> FinitePartition:
    """不交并：先放 P 的元素，再放 Q 的元素"""
    shift = P.block_count
    return FinitePartition.of(P.blocks + tuple(b + shift for b in Q.blocks))


def finite_times(P: FinitePartition, Q: FinitePartition) -> FinitePartition:
    """积：元素 i·|Q| + j 对应 (i, j)"""
    n = Q.block_count
    return FinitePartition.of(p * n + q for p in P.blocks for q in Q.blocks)


def embed_finite(P: FinitePartition) -> Decidable:
    """k 及以上的元素并入 k-1 所在的类"""
    if P.carrier_size == 0:
        raise FiniteOracleError("cannot embed the empty partition", k=0)
    block = table_program(P.blocks)
    decider = encode(ifz(ne(o(block, L), o(block, R)), K(1), K(0)))
    return Decidable(decider, f"finite table over {P.carrier_size} elements")
