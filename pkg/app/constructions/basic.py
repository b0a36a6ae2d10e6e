# -*- coding: utf-8 -*-
"""
跳跃的基本性质对应的构造
  const_into_jump        E ≤ E⁺
  map_jump               f: E ≤ F 提升为 E⁺ ≤ F⁺
  oplus_split / merge    (E⊕F)⁺ ≡ E⁺ × F⁺
  idplus_up / down       (=^ce)⁺ ≡ F₂^ce
  transfinite_closed_family
  light_high_reduction / closed_pair_reduction
每个构造都是一个模板 T 加上 smn：见证函数为 x ↦ smn(T, …)。
"""

import logging
from typing import Tuple

from app.constructions.witness import ReductionWitness
from app.core.exception import NotationError
from app.jump.iterate import iterate_jump_transfinite
from app.jump.notation import Limit, Notation, One, Successor
from app.kernel.catalog import (
    COLUMN, COMPOSE, LIST_ENUM, I, K, L, R, Pair, apply, cons, curry, falsy, guard,
    halves, ifz, let, ne, o, partial_transformer, pred, sub, succ,
)
from app.kernel.enumeration import View
from app.kernel.numbering import encode
from app.kernel.pairing import pair
from app.kernel.recursion import IDENT_INDEX, LEFT_INDEX, fix, smn, transformer_of
from app.relations.presentation import (
    CeRestriction, ColumnRelation, JumpOf, Product, RelationPresentation, SetRelation,
    Sum, make_id,
)
from app.relations.saturation import domain_to_range_transformer

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------- E ≤ E⁺

def const_into_jump(E: RelationPresentation) -> ReductionWitness:
    """φ_{f(e)} 为取值 e 的常函数"""
    return ReductionWitness(transformer_of(LEFT_INDEX), E, JumpOf(E), "const_into_jump")


# ---------------------------------------------------------------- E⁺ ≤ F⁺

def map_jump_index(f: int, e: int) -> int:
    """φ_{g(e)}(n) = φ_f(φ_e(n))"""
    return smn(COMPOSE, pair(f, e))


def map_jump(w: ReductionWitness) -> ReductionWitness:
    return ReductionWitness(
        partial_transformer(COMPOSE, w.function_index),
        JumpOf(w.source), JumpOf(w.target), f"map_jump({w.provenance})", w.notes,
    )


def compose_witnesses(first: ReductionWitness, second: ReductionWitness) -> ReductionWitness:
    """先 first 后 second"""
    index = smn(COMPOSE, pair(second.function_index, first.function_index))
    return ReductionWitness(index, first.source, second.target,
                            f"{second.provenance}.{first.provenance}", first.notes + second.notes)


def identity_witness(E: RelationPresentation) -> ReductionWitness:
    return ReductionWitness(IDENT_INDEX, E, E, "identity")


# ---------------------------------------------------------------- (E⊕F)⁺ ≡ E⁺ × F⁺

# ⟨⟨e, side⟩, n⟩ ↦ m 若 φ_e(n) = ⟨m, tag⟩ 且 min(tag, 1) = side
_SPLIT_SIDE = o(R, L, L)
SPLIT = encode(let(apply(o(L, L), R),
                   guard(ne(sub(K(1), falsy(o(R, R))), _SPLIT_SIDE), o(L, R))))

# ⟨⟨e0, e1⟩, x⟩：x = 2n 得 ⟨φ_e0(n), 0⟩，x = 2n+1 得 ⟨φ_e1(n), 1⟩
MERGE = encode(let(halves(R), ifz(o(R, R),
                                  Pair(apply(o(L, L, L), o(L, R)), K(0)),
                                  Pair(apply(o(R, L, L), o(L, R)), K(1)))))


def oplus_split(e: int) -> Tuple[int, int]:
    return smn(SPLIT, pair(e, 0)), smn(SPLIT, pair(e, 1))


def product_merge(e0: int, e1: int) -> int:
    return smn(MERGE, pair(e0, e1))


def oplus_split_witness(E: RelationPresentation, F: RelationPresentation) -> ReductionWitness:
    """(E⊕F)⁺ ≤ E⁺ × F⁺：e ↦ ⟨e₀, e₁⟩"""
    index = encode(Pair(curry(K(SPLIT), Pair(I, K(0))), curry(K(SPLIT), Pair(I, K(1)))))
    return ReductionWitness(index, JumpOf(Sum(E, F)), Product(JumpOf(E), JumpOf(F)), "oplus_split")


def product_merge_witness(E: RelationPresentation, F: RelationPresentation) -> ReductionWitness:
    """E⁺ × F⁺ ≤ (E⊕F)⁺：⟨e₀, e₁⟩ ↦ e"""
    return ReductionWitness(transformer_of(MERGE), Product(JumpOf(E), JumpOf(F)), JumpOf(Sum(E, F)),
                            "product_merge")


# ---------------------------------------------------------------- (=^ce)⁺ ≡ F₂^ce

# ⟨e, ⟨n, i⟩⟩ ↦ ⟨n, φ_{φ_e(n)}(i)⟩：第 n 列为 ran φ_{φ_e(n)}
IDPLUS_UP = encode(Pair(o(L, R), apply(apply(L, o(L, R)), o(R, R))))
# ⟨e, n⟩ ↦ smn(COLUMN, ⟨e, n⟩)：第 n 项枚举 ran φ_e 的第 n 列
IDPLUS_DOWN = transformer_of(COLUMN)

_SETS = CeRestriction(SetRelation.EQUALITY, View.RANGE)
_COLUMNS = ColumnRelation(2, View.RANGE)
_NONEMPTY_NOTE = "column families compare nonempty columns; member sets of the jump side are taken nonempty"


def idplus_up(e: int) -> int:
    return smn(IDPLUS_UP, e)


def idplus_down(e: int) -> int:
    return smn(IDPLUS_DOWN, e)


def idplus_up_witness() -> ReductionWitness:
    return ReductionWitness(transformer_of(IDPLUS_UP), JumpOf(_SETS), _COLUMNS, "idplus_up", (_NONEMPTY_NOTE,))


def idplus_down_witness() -> ReductionWitness:
    return ReductionWitness(transformer_of(IDPLUS_DOWN), _COLUMNS, JumpOf(_SETS), "idplus_down", (_NONEMPTY_NOTE,))


# ---------------------------------------------------------------- E^{+a} ≤ E

# ⟨⟨⟨z, ⟨f, g⟩⟩, e⟩, ⟨m, x⟩⟩ ↦ φ_g(⟨φ_{f_{φ_e(m)}}(x), m⟩)，其中 f_b = φ_z(⟨⟨f, g⟩, b⟩)
_LIMF_COLUMN = apply(o(R, L), o(L, R))
_LIMF_INNER = apply(apply(o(L, L, L), Pair(o(R, L, L), _LIMF_COLUMN)), o(R, R))
LIMF = encode(apply(o(R, R, L, L), Pair(_LIMF_INNER, o(L, R))))


def _family_body():
    # ⟨z, ⟨⟨f, g⟩, a⟩⟩，a 为紧凑记号编码
    z, fg, f, a = L, o(L, R), o(L, L, R), o(R, R)
    tag, payload = o(L, pred(a)), o(R, pred(a))
    succ_case = curry(K(COMPOSE), Pair(f, apply(z, Pair(fg, payload))))
    lim_case = curry(K(LIMF), Pair(Pair(z, fg), payload))
    return ifz(a, K(IDENT_INDEX), ifz(tag, succ_case, lim_case))


FAMILY_BODY = encode(_family_body())
FAMILY = fix(transformer_of(FAMILY_BODY))


def family_index(f: int, g: int, a: Notation) -> int:
    """f_a 的编号：f_1 = id，f_{2^b} = f ∘ f_b，极限处按列分派后经 g 合并"""
    if isinstance(a, One):
        return IDENT_INDEX
    if isinstance(a, Successor):
        return smn(COMPOSE, pair(f, family_index(f, g, a.base)))
    if isinstance(a, Limit):
        return smn(LIMF, pair(pair(FAMILY, pair(f, g)), a.sequence))
    raise NotationError(f"not a notation: {a!r}")


def transfinite_closed_family(f: ReductionWitness, g: ReductionWitness, a: Notation) -> ReductionWitness:
    """由 f: E⁺ ≤ E 与 g: E × id ≤ E 得到 E^{+a} ≤ E"""
    E = f.target
    index = family_index(f.function_index, g.function_index, a)
    logger.debug(f"[CONSTRUCT] closed family at {a!r} -> {index}")
    return ReductionWitness(index, iterate_jump_transfinite(E, a), E, "transfinite_closed_family",
                            ("premises f and g are supplied stand-ins",))


# ---------------------------------------------------------------- 由 id ≤ E 推出的归约

def light_high_reduction(h: ReductionWitness) -> ReductionWitness:
    """h: id ≤ E 给出 id⁺ ≤ E⁺，前接 W_e ↦ ran 得到 =^ce ≤ E⁺"""
    to_range = ReductionWitness(domain_to_range_transformer(), CeRestriction(SetRelation.EQUALITY, View.DOMAIN),
                                JumpOf(make_id()), "domain_to_range")
    return compose_witnesses(to_range, map_jump(h))


def _closed_pair(h: int):
    # ⟨e, n⟩ ↦ 枚举 {code{e}, code{h(n), h(n+1)}} 的编号
    single = curry(K(LEFT_INDEX), L)
    two = curry(K(LIST_ENUM), cons(apply(K(h), R), cons(apply(K(h), succ(R)), K(0))))
    return curry(K(LIST_ENUM), cons(single, cons(two, K(0))))


def closed_pair_reduction(h: ReductionWitness) -> ReductionWitness:
    """h: id ≤ E 给出 E × id ≤ E⁺⁺"""
    E = h.target
    index = encode(_closed_pair(h.function_index))
    return ReductionWitness(index, Product(E, make_id()), JumpOf(JumpOf(E)), "closed_pair_reduction")
