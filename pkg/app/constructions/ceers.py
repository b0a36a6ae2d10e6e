# -*- coding: utf-8 -*-
"""
ceer 与 E_A 的跳跃
  aux_set_A             id ≤ E⁺（辅助集合 A 的列为初始区间）
  upperbound            E⁺ ≤ =^ce 以及不变集合上的反向归约
  double_plus           id ≤ E⁺⁺
  nonhhs_high           =^ce ≤ (E_A)⁺
  ea_shrink             E_A ≤ E_B 及其跳跃
  e1ce                  E₁^ce ≤ (=^ce)⁺
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from app.constructions.basic import map_jump
from app.constructions.witness import ReductionWitness
from app.core.exception import ConstructionError
from app.kernel.catalog import (
    LIST_ENUM, LIST_MIN, I, K, L, R, Pair, add, apply, call, class_of, cons, curry,
    falsy, guard, head, ifz, let, loop, lt, ne, nth, o, partial_transformer, pred, sub,
    succ, table_program, tail, tup,
)
from app.jump.subset import PartnerHint, subset_at_stage
from app.kernel.enumeration import View, certified_set, lag, set_at
from app.kernel.machine import Halted, evaluate
from app.kernel.numbering import encode
from app.kernel.pairing import pair, right
from app.kernel.recursion import fix, smn, transformer_of
from app.relations.closure import brute_force_closure
from app.relations.presentation import (
    EA, Ceer, CeRestriction, JumpOf, RelationPresentation, SetRelation, make_e1_ce, make_id,
)
from app.relations.saturation import domain_to_range_transformer, invariant_closure_transformer
from app.relations.verdict import Verdict, conjoin

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------- 辅助集合 A

def _interval_body():
    # ⟨z, ⟨c, ⟨n, t⟩⟩⟩ ↦ J_n(t)：J_0 = 0，J_n 为大于 J_{n-1} 且其类（t 步内可见的边）
    # 与 [0, J_{n-1}] 不交的最小 j
    z, c, n, t = L, o(L, R), o(L, R, R), o(R, R, R)
    prev = apply(z, Pair(c, Pair(pred(n), t)))
    sc, sprev, st, sj = (nth(i, 4) for i in range(4))
    least = pred(call(LIST_MIN, class_of(sc, cons(sj, K(0)), st)))
    search = o(sj, loop(sub(succ(sprev), least), tup(sc, sprev, st, succ(sj))),
               let(prev, tup(o(c, L), R, o(t, L), succ(R))))
    return ifz(n, K(0), search)


INTERVAL_BODY = encode(_interval_body())
INTERVAL = fix(transformer_of(INTERVAL_BODY))


def _column_enum():
    # ⟨⟨c, n⟩, i⟩ ↦ i 若某个 t 使 i ≤ J_n(t)；状态 ⟨c, n, i, t⟩，t 逐次加倍
    c, n, i, t = (nth(k, 4) for k in range(4))
    bound = call(INTERVAL, Pair(c, Pair(n, t)))
    start = tup(o(L, L), o(R, L), R, K(1))
    return o(i, loop(sub(i, bound), tup(c, n, i, succ(add(t, t)))), start)


COLUMN_ENUM = encode(_column_enum())
# ⟨c, ⟨n, i⟩⟩ ↦ ⟨n, i⟩ 若 i ∈ A_(n)
A_ENUM = encode(o(R, Pair(call(COLUMN_ENUM, Pair(Pair(L, o(L, R)), o(R, R))), R)))


def aux_column_index(E: Ceer, n: int) -> int:
    """ran φ_{f(n)} = A_(n)"""
    return smn(COLUMN_ENUM, pair(E.pair_enumerator, n))


def aux_set_A(E: Ceer) -> Tuple[int, ReductionWitness]:
    """返回 (A 的枚举编号, f: id ≤ E⁺)"""
    a_index = smn(A_ENUM, E.pair_enumerator)
    witness = ReductionWitness(partial_transformer(COLUMN_ENUM, E.pair_enumerator), make_id(), JumpOf(E),
                               "aux_set_A", ("E is assumed to have infinitely many classes",))
    return a_index, witness


def aux_columns_reference(points: Iterable[int], edges: Iterable[Tuple[int, int]], count: int) -> List[Tuple[int, ...]]:
    """直接按定义计算前 count 列（points 须覆盖所需的元素）"""
    classes = brute_force_closure(points, edges)
    block = {x: min(c) for c in classes for x in c}
    columns, top = [(0,)], 0
    for _ in range(1, count):
        j = top + 1
        while block.get(j, j) <= top:
            j += 1
        top = j
        columns.append(tuple(range(top + 1)))
    return columns


# ---------------------------------------------------------------- 上界

def upperbound_reduction(E: Ceer) -> ReductionWitness:
    """E⁺ ≤ =^ce：e ↦ f(e)，W_{f(e)} = [ran φ_e]_E"""
    return ReductionWitness(invariant_closure_transformer(E), JumpOf(E),
                            CeRestriction(SetRelation.EQUALITY, View.DOMAIN), "upperbound")


def invariant_to_jump(E: RelationPresentation) -> ReductionWitness:
    """E-不变集合上 =^ce ≤ E⁺：ran φ_{g(e)} = W_e"""
    return ReductionWitness(domain_to_range_transformer(), CeRestriction(SetRelation.EQUALITY, View.DOMAIN),
                            JumpOf(E), "invariant_to_jump", ("sources are E-invariant sets",))


# ---------------------------------------------------------------- id ≤ E⁺⁺

def _double_plus():
    # ⟨n, i⟩ ↦ smn(LIST_ENUM, i) 若 i 是长度为 n 的严格递增表
    # 状态 ⟨rest, last+1, count, bad⟩
    rest, last1, count, bad = (nth(k, 4) for k in range(4))
    step_bad = ifz(last1, K(0), sub(last1, head(rest)))
    body = tup(tail(rest), succ(head(rest)), succ(count), step_bad)
    scan = loop(ifz(rest, K(0), falsy(bad)), body)
    result = o(scan, tup(R, K(0), K(0), K(0)))
    check = add(o(bad, R), ne(o(count, R), o(L, L)))
    return let(result, guard(check, curry(K(LIST_ENUM), o(R, L))))


DOUBLE_PLUS = encode(_double_plus())


def double_plus_index(n: int) -> int:
    """f(n) 依次枚举全部 n 元集合的规范枚举编号"""
    return smn(DOUBLE_PLUS, n)


def double_plus_reduction(E: Optional[RelationPresentation] = None) -> ReductionWitness:
    E = make_id() if E is None else E
    return ReductionWitness(transformer_of(DOUBLE_PLUS), make_id(), JumpOf(JumpOf(E)), "double_plus",
                            ("E is assumed to have infinitely many classes",))


# ---------------------------------------------------------------- =^ce ≤ (E_A)⁺

# ⟨⟨fd, e⟩, ⟨n, k⟩⟩ ↦ φ_{φ_fd(n)}(k) 若 n ∈ W_e
# 族成员以值域给出：ran φ_{fd(n)} 即 W_{fd(n)}，W-编号可先经 domain_to_range 换成这种形式
NONHHS = encode(o(R, Pair(apply(o(R, L), o(L, R)), apply(apply(o(L, L), o(L, R)), o(R, R)))))


def _sampled_sets(f_disjoint: int, count: int, stage: int) -> Dict[int, FrozenSet[int]]:
    sets = {}
    for n in range(count):
        outcome = evaluate(f_disjoint, n, stage)
        if isinstance(outcome, Halted):
            exact = certified_set(outcome.value, stage)
            sets[n] = exact if exact is not None else set_at(outcome.value, stage)
    return sets


def nonhhs_high_reduction(f_disjoint: int, a_enum: int, samples: int = 8, stage: int = 2000) -> ReductionWitness:
    """φ_{g(e)} 枚举 ⋃{ran φ_{φ_fd(n)} : n ∈ W_e}

    fd(n) 是第 n 个集合的值域枚举编号，ran φ_{fd(n)} 与 W_{fd(n)} 表示同一族；
    """
    sets = _sampled_sets(f_disjoint, samples, stage)
    seen: Dict[int, int] = {}
    for n, members in sets.items():
        for x in members:
            if x in seen:
                raise ConstructionError("nonhhs_high_reduction", "sampled sets overlap",
                                        element=x, first=seen[x], second=n)
            seen[x] = n
    return ReductionWitness(partial_transformer(NONHHS, f_disjoint),
                            CeRestriction(SetRelation.EQUALITY, View.DOMAIN), JumpOf(EA(a_enum)),
                            "nonhhs_high", ("disjoint family meets the complement of A (caller premise)",))


# ---------------------------------------------------------------- E_A ≤ E_B

def ea_shrink_reduction(b_elem: int, c_decider: int, a_enum: int, b_enum: int) -> ReductionWitness:
    """f(n) = b，n ∈ C；否则 f(n) = n"""
    index = encode(ifz(call(c_decider, I), I, K(b_elem)))
    return ReductionWitness(index, EA(a_enum), EA(b_enum), "ea_shrink",
                            ("B ∪ C = A is a caller premise",))


def ea_shrink_jump(b_elem: int, c_decider: int, a_enum: int, b_enum: int) -> ReductionWitness:
    return map_jump(ea_shrink_reduction(b_elem, c_decider, a_enum, b_enum))


# ---------------------------------------------------------------- E₁^ce ≤ (=^ce)⁺

# ⟨⟨e, ⟨f, m⟩⟩, ⟨n, p⟩⟩ ↦ ⟨n, p⟩ 若 ⟨n,p⟩ ∈ W_f（n < m）或 ∈ W_e（n ≥ m）
_E, _F, _M = o(L, L), o(L, R, L), o(R, R, L)
_SOURCE = ifz(lt(o(L, R), _M), _E, _F)
MIX = encode(o(R, Pair(apply(_SOURCE, R), R)))
E1CE = transformer_of(MIX)


def e1ce_index(e: int) -> int:
    """φ_{g(e)}(⟨f, m⟩) 枚举 ⋃_{n<m}(W_f)_(n) ∪ ⋃_{n≥m}(W_e)_(n)"""
    return smn(E1CE, e)


def e1ce_reduction() -> ReductionWitness:
    return ReductionWitness(transformer_of(E1CE), make_e1_ce(),
                            JumpOf(CeRestriction(SetRelation.EQUALITY, View.RANGE)), "e1ce")


def e1ce_hint(threshold: int) -> PartnerHint:
    """g(e) 在输入 ⟨f, m⟩ 上给出的 x，其伙伴取 g(e′) 在 ⟨x, max(m, threshold)⟩ 上的值

    W_x 就是 x 枚举的集合，伙伴的前 max(m, threshold) 列照抄 x，其余列取自 e′。
    """
    def hint(source: int, element: int) -> List[int]:
        return [pair(element, max(right(source), threshold))]
    return hint


def e1ce_column_check(e: int, e2: int, stage: int, threshold: int = 3) -> Verdict:
    """g(e) (=^ce)⁺ g(e2) 的分阶段判定；两侧的伙伴由 e1ce_hint 补充"""
    inner = CeRestriction(SetRelation.EQUALITY, View.RANGE)
    ge, ge2 = e1ce_index(e), e1ce_index(e2)
    hint = e1ce_hint(threshold)
    back = lag(stage)
    forward = subset_at_stage(ge, ge2, inner, stage, tested_stage=back, partner_hint=hint)
    backward = subset_at_stage(ge2, ge, inner, stage, tested_stage=back, partner_hint=hint)
    verdict = conjoin(forward, backward, stage)
    logger.debug(f"[E1CE] ({e}, {e2}) @ {stage}: {forward.answer}/{backward.answer} -> {verdict.answer}")
    return verdict


def full_columns_index(columns: Iterable[int], tail_from: Optional[int] = None) -> int:
    """W 由 columns 中的整列组成；tail_from 给出时再加上它之后的全部列"""
    chosen = set(columns)
    width = max(chosen | ({tail_from} if tail_from is not None else set()), default=0) + 1
    values = [0 if n in chosen or (tail_from is not None and n >= tail_from) else 1 for n in range(width)]
    values.append(0 if tail_from is not None else 1)
    return encode(guard(o(table_program(values), L), I))


def e1ce_sample_checks() -> Tuple[Tuple[int, int, bool], ...]:
    """(e, e′, 期望) 样例：第一对在第 3 列之后一致，第二对在第 5 列之后处处不同"""
    e = full_columns_index([0, 3], tail_from=5)
    return ((e, full_columns_index([1, 3], tail_from=5), True),
            (e, full_columns_index([0, 3]), False))
