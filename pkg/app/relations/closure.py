# -*- coding: utf-8 -*-
"""
ceer 的阶段闭包（并查集）
"""

import logging
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Tuple

from app.kernel.enumeration import View, stream
from app.kernel.pairing import unpair

logger = logging.getLogger(__name__)


@dataclass
class ClassClosure:
    """已见配对生成的等价划分；只包含出现过的元素，其余元素自成一类"""
    stage: int = 0
    edges: int = 0
    _parent: Dict[int, int] = field(default_factory=dict, repr=False)

    def find(self, x: int) -> int:
        parent = self._parent
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        self._parent.setdefault(a, a)
        self._parent.setdefault(b, b)
        if ra != rb:
            if ra < rb:
                ra, rb = rb, ra
            self._parent[ra] = rb
        self.edges += 1

    def same(self, a: int, b: int) -> bool:
        return a == b or self.find(a) == self.find(b)

    def support(self) -> FrozenSet[int]:
        return frozenset(self._parent)

    def classes(self) -> List[FrozenSet[int]]:
        groups: Dict[int, set] = {}
        for x in self._parent:
            groups.setdefault(self.find(x), set()).add(x)
        return sorted((frozenset(g) for g in groups.values()), key=min)

    def copy(self) -> "ClassClosure":
        return ClassClosure(self.stage, self.edges, dict(self._parent))

    def extend(self, pairs: Iterable[Tuple[int, int]]) -> None:
        for a, b in pairs:
            self.union(a, b)


CLOSURE_CACHE_SIZE = 256
_closures: "OrderedDict[int, ClassClosure]" = OrderedDict()


def closure_stage(pair_enumerator: int, stage: int) -> ClassClosure:
    """前 stage 阶段已枚举配对的并查集；对更高阶段增量扩展"""
    cached = _closures.get(pair_enumerator)
    discoveries = stream(pair_enumerator, View.RANGE).discoveries(stage)
    if cached is not None and cached.stage <= stage:
        closure = cached.copy()
        fresh = [d for d in discoveries if d.stage > cached.stage]
    else:
        closure = ClassClosure()
        fresh = list(discoveries)
    closure.extend(unpair(d.element) for d in fresh)
    closure.stage = stage
    if cached is None or cached.stage <= stage:
        _closures[pair_enumerator] = closure
    if cached is not None:
        _closures.move_to_end(pair_enumerator)
    elif len(_closures) > CLOSURE_CACHE_SIZE:
        _closures.popitem(last=False)
    logger.debug(f"[CLOSURE] ceer {pair_enumerator} 在阶段 {stage} 共有 {closure.edges} 条边")
    return closure.copy()


def brute_force_closure(points: Iterable[int], edges: Iterable[Tuple[int, int]]) -> List[FrozenSet[int]]:
    """直接计算传递闭包的类（用于核对）"""
    classes = [{p} for p in points]
    for a, b in edges:
        ca = next((c for c in classes if a in c), None)
        cb = next((c for c in classes if b in c), None)
        if ca is None:
            ca = {a}
            classes.append(ca)
        if cb is None:
            cb = {b}
            classes.append(cb)
        if ca is not cb:
            ca |= cb
            classes.remove(cb)
    return sorted((frozenset(c) for c in classes), key=min)
