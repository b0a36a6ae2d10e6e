# -*- coding: utf-8 -*-
"""
超算术集合到迭代跳跃的归约

    superset_union         i ↦ W_i ∪ ran φ_e0 的枚举编号
    pi04_reduction         Π⁰₄ 集合 ≤ (=^ce)⁺
    borel_code_reduction   B ≤ id^{+a_T}，沿 Borel 码逐层构造
    counterexample_pair    子集一侧没有对应的 W_i ∩ e0 族

Borel 码在机器内由程序 tree 给出：φ_tree(t) = ⟨0, f⟩ 表示终端结点且
B_t = ran φ_f，⟨1, 0⟩ 表示非终端结点，其子结点为 t⌢⟨p, q⟩。地址 t 用表码
存放，最近一层在表头。构造本身不依赖窗口；窗口只在主机侧按定义直接
计算 B_t，作为测试用的真值。
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from app.constructions.witness import PartnerHint
from app.core.exception import ConstructionError
from app.jump.iterate import iterate_jump_transfinite
from app.jump.notation import NADD, Notation, Successor, describe, from_compact
from app.jump.subset import subset_at_stage
from app.kernel.catalog import (
    COMPOSE, DOMAIN_TO_RANGE, EMPTY_SET, UNION_ENUM, UNION_RANGE, I, K, L, R, Pair, add,
    apply, call, cons, curry, finite_set_index, halves, head, ifz, in_range, let, loop, lt, ne, nth, o,
    partial_transformer, pred, sub, succ, tup,
)
from app.kernel.enumeration import View, certified_set, set_at
from app.kernel.machine import Halted, evaluate
from app.kernel.numbering import encode
from app.kernel.pairing import list_code, pair, tuple_code, unpair
from app.kernel.recursion import IDENT_INDEX, LEFT_INDEX, const_index, fix, smn, transformer_of
from app.relations.presentation import CeRestriction, JumpOf, RelationPresentation, SetRelation, make_id
from app.relations.query import query
from app.relations.verdict import Verdict

logger = logging.getLogger(__name__)

CONSTRUCTION_FUEL = 100_000

# x ↦ const_index(x)：E ≤ E⁺
CONST_T = transformer_of(LEFT_INDEX)
# f ↦ map_jump(f) 的编号
MAPJ = transformer_of(COMPOSE)
# h ↦ (i ↦ ran φ_h ∪ ran φ_i 的枚举编号)
UNIONFAM = transformer_of(UNION_ENUM)


def _succ_code(f):
    return succ(Pair(K(0), f))


def _lim_code(f):
    return succ(Pair(K(1), f))


def _twice(f):
    return _succ_code(_succ_code(f))


def _then_const(f):
    """先 f 再 const_into_jump"""
    return curry(K(COMPOSE), Pair(K(CONST_T), f))


# ---------------------------------------------------------------- W_i ∪ e0

def superset_union(e0: int) -> int:
    """i ↦ 枚举 W_i ∪ ran φ_e0 的编号"""
    return partial_transformer(UNION_RANGE, e0)


def superset_member(e0: int, i: int) -> int:
    return smn(UNION_RANGE, pair(e0, i))


def superset_hint(source: int, element: int) -> List[int]:
    """ran φ_e0 在输入 k 处的元素出现在并集的输入 2k 处"""
    return [2 * source]


# ---------------------------------------------------------------- 记号之间的嵌入

def _base_body():
    # ⟨z, c⟩ ↦ id ≤ id^{+c} 的编号
    z, c = L, R
    tag, payload = o(L, pred(c)), o(R, pred(c))
    succ_case = _then_const(apply(z, payload))
    lim_case = curry(K(COLUMN_ZERO), apply(z, apply(payload, K(0))))
    return ifz(c, K(IDENT_INDEX), ifz(tag, succ_case, lim_case))


# ⟨f, x⟩ ↦ ⟨0, φ_f(x)⟩
COLUMN_ZERO = encode(Pair(K(0), apply(L, R)))
BASE_BODY = encode(_base_body())
BASE = fix(transformer_of(BASE_BODY))

# ⟨⟨z, ⟨c, e⟩⟩, ⟨m, x⟩⟩ ↦ ⟨m, φ_{ι(c, φ_e(m))}(x)⟩
_LIMEMB_SHIFT = apply(o(L, L), Pair(o(L, R, L), apply(o(R, R, L), o(L, R))))
LIMEMB = encode(Pair(o(L, R), apply(_LIMEMB_SHIFT, o(R, R))))


def _emb_body():
    # ⟨z, ⟨c, a⟩⟩ ↦ ι(c, a)：id^{+a} ≤ id^{+(c +_O a)}，对 a 右递归
    z, c, a = L, o(L, R), o(R, R)
    tag, payload = o(L, pred(a)), o(R, pred(a))
    succ_case = curry(K(MAPJ), apply(z, Pair(c, payload)))
    lim_case = curry(K(LIMEMB), Pair(z, Pair(c, payload)))
    return ifz(a, call(BASE, c), ifz(tag, succ_case, lim_case))


EMB_BODY = encode(_emb_body())
EMB = fix(transformer_of(EMB_BODY))


def embedding_index(c: int, a: int, fuel: int = CONSTRUCTION_FUEL) -> int:
    """id^{+a} ≤ id^{+(c +_O a)} 的编号（c, a 为紧凑记号编码）"""
    outcome = evaluate(EMB, pair(c, a), fuel)
    if not isinstance(outcome, Halted):
        raise ConstructionError("embedding", "embedding index did not halt within fuel", c=c, a=a)
    return outcome.value


# ---------------------------------------------------------------- Borel 码的结点上下文
# 上下文 N = ⟨z, ⟨tree, t⟩⟩，z 为整个递归本身

def _child(N, p, q):
    """子结点 t⌢⟨p, q⟩ 的三元组 ⟨a, ⟨H, e⟩⟩"""
    return apply(o(L, N), Pair(o(L, R, N), cons(Pair(p, q), o(R, R, N))))


def _atq():
    # ⟨⟨N, p⟩, q⟩ ↦ ã_{p,q}：ã_{p,0} = a_{p,0}，ã_{p,k+1} = ã_{p,k} + a_{p,k+1} + 1
    N, p, q, k, acc = (nth(i, 5) for i in range(5))
    step = let(o(L, _child(N, p, succ(k))),
               tup(o(N, L), o(p, L), o(q, L), succ(o(k, L)),
                   _succ_code(call(NADD, Pair(o(acc, L), R)))))
    start = tup(o(L, L), o(R, L), R, K(0), o(L, _child(o(L, L), o(R, L), K(0))))
    return o(acc, loop(lt(k, q), step), start)


ATQ = encode(_atq())


def _atilde_at(N, p, q):
    return call(ATQ, Pair(Pair(N, p), q))


def _atilde(N, p):
    """ã_p = Lim(q ↦ ã_{p,q})"""
    return _lim_code(curry(K(ATQ), Pair(N, p)))


def _psi(N, p, q):
    """id^{+a_{p,q}} ≤ id^{+ã_{p,q}}"""
    raised = _then_const(call(EMB, Pair(_atilde_at(N, p, pred(q)), o(L, _child(N, p, q)))))
    return ifz(q, K(IDENT_INDEX), raised)


def _etilde(N, p, q):
    return curry(K(COMPOSE), Pair(_psi(N, p, q), o(R, R, _child(N, p, q))))


def _htilde(N, p, q, n):
    return curry(K(COMPOSE), Pair(_psi(N, p, q), apply(o(L, R, _child(N, p, q)), n)))


def _hprime():
    # ⟨⟨N, ⟨p, ⟨q, n⟩⟩⟩, ⟨q′, i⟩⟩：q′ = q 的一列取 h̃，其余列取 ẽ
    N, p, q, n = o(L, L), o(L, R, L), o(L, R, R, L), o(R, R, R, L)
    other, i = o(L, R), o(R, R)
    return ifz(ne(other, q),
               Pair(q, apply(_htilde(N, p, q, n), i)),
               Pair(other, apply(_etilde(N, p, other), i)))


HPRIME = encode(_hprime())
# ⟨⟨N, p⟩, ⟨q′, i⟩⟩ ↦ ⟨q′, φ_{ẽ_{p,q′}}(i)⟩
EPRIME = encode(Pair(o(L, R), apply(_etilde(o(L, L), o(R, L), o(L, R)), o(R, R))))


def _jtilde():
    # ⟨⟨N, ⟨p, n⟩⟩, ⟨i, q⟩⟩ ↦ W_i ∪ ran j(q, n)，j(q, n) 为 h′(q, n) 的超集族
    N, p, n = o(L, L), o(L, R, L), o(R, R, L)
    i, q = o(L, R), o(R, R)
    j = curry(K(UNIONFAM), curry(K(HPRIME), Pair(N, Pair(p, Pair(q, n)))))
    return curry(K(UNION_ENUM), Pair(j, i))


JTILDE = encode(_jtilde())


def _jtilde_zero(N, p):
    j0 = curry(K(UNIONFAM), curry(K(EPRIME), Pair(N, p)))
    return curry(K(UNIONFAM), j0)


def _ap():
    # ⟨N, p⟩ ↦ â_p：â_0 = ã_0 + 2，â_{k+1} = â_k + (ã_{k+1} + 2) + 1
    N, p, k, acc = (nth(i, 4) for i in range(4))
    step = tup(N, p, succ(k), _succ_code(call(NADD, Pair(acc, _twice(_atilde(N, succ(k)))))))
    start = tup(L, R, K(0), _twice(_atilde(L, K(0))))
    return o(acc, loop(lt(k, p), step), start)


AP = encode(_ap())


def _psi_universal(N, p):
    """id^{+(ã_p + 2)} ≤ id^{+â_p}"""
    raised = _then_const(call(EMB, Pair(call(AP, Pair(N, pred(p))), _twice(_atilde(N, p)))))
    return ifz(p, K(IDENT_INDEX), raised)


def _c(N, p, n):
    lifted = curry(K(COMPOSE), Pair(_psi_universal(N, p), curry(K(JTILDE), Pair(N, Pair(p, n)))))
    return curry(K(UNIONFAM), lifted)


def _c_zero(N, p):
    lifted = curry(K(COMPOSE), Pair(_psi_universal(N, p), _jtilde_zero(N, p)))
    return curry(K(UNIONFAM), lifted)


# ⟨⟨N, n⟩, ⟨p, i⟩⟩ ↦ ⟨p, φ_{c(p, n)}(i)⟩
DISPATCH = encode(Pair(o(L, R), apply(_c(o(L, L), o(L, R), o(R, L)), o(R, R))))
# ⟨N, ⟨p, i⟩⟩ ↦ ⟨p, φ_{c₀(p)}(i)⟩
DISPATCH_ZERO = encode(Pair(o(L, R), apply(_c_zero(L, o(L, R)), o(R, R))))
# ⟨N, p⟩ ↦ Succ(â_p)：F_t 的第 p 列是 id^{+â_p} 的跳跃
BSEQ = encode(_succ_code(call(AP, I)))
# ⟨N, n⟩ ↦ h_t(n)
HT = encode(curry(K(UNIONFAM), curry(K(DISPATCH), I)))

# 终端结点：⟨⟨f, n⟩, i⟩ ↦ i 若 n ∈ ran φ_f
TERM = encode(o(R, Pair(in_range(o(L, L), o(R, L)), R)))
TERMH = transformer_of(TERM)


def _borel_body():
    # N = ⟨z, ⟨tree, t⟩⟩ ↦ ⟨a_t, ⟨H_t, e_t⟩⟩
    descriptor = apply(o(L, R), o(R, R))
    N, kind, f = L, o(L, R), o(R, R)
    terminal = Pair(K(0), Pair(curry(K(TERMH), f), K(IDENT_INDEX)))
    branch = Pair(_succ_code(_lim_code(curry(K(BSEQ), N))),
                  Pair(curry(K(HT), N), curry(K(UNIONFAM), curry(K(DISPATCH_ZERO), N))))
    return let(descriptor, ifz(kind, terminal, branch))


BOREL_BODY = encode(_borel_body())
BOREL = fix(transformer_of(BOREL_BODY))


# ---------------------------------------------------------------- 主机侧的 Borel 码

TERMINAL, BRANCH = 0, 1


@dataclass(frozen=True)
class BorelCode:
    """φ_tree(地址) = ⟨0, f⟩ 或 ⟨1, 0⟩；windows[d] 为深度 d 处的 (P, Q) 窗口"""
    tree: int
    windows: Tuple[Tuple[int, int], ...] = ()
    description: str = ""

    def node(self, address: Sequence[Tuple[int, int]], fuel: int = CONSTRUCTION_FUEL) -> Tuple[int, int]:
        code = list_code(pair(p, q) for p, q in reversed(address))
        outcome = evaluate(self.tree, code, fuel)
        if not isinstance(outcome, Halted):
            raise ConstructionError("borel_code_reduction", "tree does not halt at address",
                                    address=list(address))
        kind, payload = unpair(outcome.value)
        if kind not in (TERMINAL, BRANCH):
            raise ConstructionError("borel_code_reduction", f"malformed node descriptor (kind {kind})",
                                    address=list(address))
        return kind, payload

    def window(self, depth: int) -> Tuple[int, int]:
        if depth >= len(self.windows):
            raise ConstructionError("borel_code_reduction", "no window declared at depth", depth=depth)
        return self.windows[depth]


def leaf_code(f: int, description: str = "") -> BorelCode:
    """根即终端结点，B = ran φ_f"""
    return BorelCode(const_index(pair(TERMINAL, f)), (), description or f"leaf({f})")


def depth_one_code(leaves: int, window: Tuple[int, int] = (4, 4), description: str = "") -> BorelCode:
    """B = {n : ∀p ∃q n ∈ ran φ_{φ_leaves(⟨p, q⟩)}}"""
    tree = encode(ifz(I, K(pair(BRANCH, 0)), Pair(K(TERMINAL), apply(K(leaves), head(I)))))
    return BorelCode(tree, (window,), description or f"depth_one({leaves})")


def threshold_leaves(upper: int, lower: int) -> int:
    """⟨p, q⟩ ↦ upper 若 q ≥ p，否则 lower"""
    return encode(ifz(sub(L, R), K(upper), K(lower)))


def constant_leaves(f: int) -> int:
    return const_index(f)


EVENS = encode(add(I, I))


def window_membership(code: BorelCode, n: int, stage: int,
                      address: Tuple[Tuple[int, int], ...] = ()) -> bool:
    """在窗口内按 B_t = {n : ∀p ∃q n ∈ B_{t⌢⟨p,q⟩}} 直接计算"""
    kind, payload = code.node(address)
    if kind == TERMINAL:
        exact = certified_set(payload, stage)
        return n in (exact if exact is not None else set_at(payload, stage))
    P, Q = code.window(len(address))
    return all(
        any(window_membership(code, n, stage, address + ((p, q),)) for q in range(Q))
        for p in range(P)
    )


def same_index_hint(source: int, element: int) -> List[int]:
    """φ_e(x) 与 x 的元素互相覆盖：候选输入即元素本身"""
    return [element]


@dataclass(frozen=True)
class MembershipReduction:
    """n ∈ B ⟺ h(n) relation e；并且 h(n) ⊆_inner e"""
    name: str
    h: int
    e: int
    relation: RelationPresentation
    inner: RelationPresentation
    hints: Optional[Callable[[int], PartnerHint]] = field(default=None, compare=False)
    notation: Optional[Notation] = None

    def instance(self, n: int, fuel: int = CONSTRUCTION_FUEL) -> int:
        outcome = evaluate(self.h, n, fuel)
        if not isinstance(outcome, Halted):
            raise ConstructionError(self.name, "h(n) did not halt within fuel", n=n)
        return outcome.value

    def verdict(self, n: int, stage: int) -> Verdict:
        return query(self.relation, self.instance(n), self.e, stage)

    def side_condition(self, n: int, stage: int) -> Verdict:
        hint = self.hints(n) if self.hints is not None else None
        return subset_at_stage(self.instance(n), self.e, self.inner, stage, partner_hint=hint)

    def describe(self) -> Dict[str, object]:
        data: Dict[str, object] = {"name": self.name, "h": self.h, "e": self.e}
        if self.notation is not None:
            data["notation"] = describe(self.notation)
        return data


def borel_code_reduction(code: BorelCode, fuel: int = CONSTRUCTION_FUEL) -> MembershipReduction:
    """B ≤ id^{+a_T}：n ∈ B ⟺ h(n) E_T e，其中 E_T = (id^{+a_root})⁺"""
    code.node(())
    outcome = evaluate(BOREL, pair(code.tree, 0), fuel)
    if not isinstance(outcome, Halted):
        raise ConstructionError("borel_code_reduction", "root triple did not halt within fuel")
    a_root, rest = unpair(outcome.value)
    h, e = unpair(rest)
    root = from_compact(a_root)
    inner = iterate_jump_transfinite(make_id(), root)
    a_T = Successor(root)
    logger.info(f"[HYP] {code.description}: a_T = {describe(a_T)}, h = {h}, e = {e}")
    return MembershipReduction("borel_code_reduction", h, e, JumpOf(inner), inner,
                               lambda n: same_index_hint, a_T)


# ---------------------------------------------------------------- Π⁰₄

def _g():
    # ⟨⟨i0, ⟨p, ⟨q, n⟩⟩⟩, y⟩：y = 2k 时若 φ_i0(k)↓ 则输出 k；y = 2m+1 输出 ⟨p, q, m, n⟩
    prm, k, parity = o(L, L), o(L, R), o(R, R)
    i0, p, q, n = o(L, prm), o(L, R, prm), o(L, R, R, prm), o(R, R, R, prm)
    from_w = o(R, Pair(apply(i0, k), k))
    return let(halves(R), ifz(parity, from_w, tup(p, q, k, n)))


G = encode(_g())


def _star():
    # ⟨⟨p, ⟨a, b⟩⟩, y⟩ ↦ ⟨p, ·⟩ 作用于 ran φ_a ∪ ran φ_b
    prm, k, parity = o(L, L), o(L, R), o(R, R)
    p, a, b = o(L, prm), o(L, R, prm), o(R, R, prm)
    return let(halves(R), Pair(p, ifz(parity, apply(a, k), apply(b, k))))


STAR = encode(_star())


def _g_expr(i0, p, q, n):
    return curry(K(G), Pair(i0, Pair(p, Pair(q, n))))


# ⟨⟨i0, n⟩, ⟨i, ⟨q, p⟩⟩⟩ ↦ (W_i ∪ W_{g(p,q,n)})^{*p}
HN = encode(curry(K(STAR), Pair(o(R, R, R), Pair(o(L, R), _g_expr(o(L, L), o(R, R, R), o(L, R, R), o(R, L))))))
# ⟨i0, ⟨i, p⟩⟩ ↦ (W_i ∪ W_i0)^{*p}
E0 = encode(curry(K(STAR), Pair(o(R, R), Pair(o(L, R), curry(K(DOMAIN_TO_RANGE), L)))))


def pi04_g(i0: int, p: int, q: int, n: int) -> int:
    """W_{g(p,q,n)} = W_i0 ∪ {⟨p, q, m, n⟩ : m}（以值域给出）"""
    return smn(G, tuple_code(i0, p, q, n))


def pi04_reduction(i0: int) -> MembershipReduction:
    """P(n) ⟺ ∀p ∃q ∀m φ_i0(⟨p, q, m, n⟩)↓ 归约到 (=^ce)⁺"""
    e0 = smn(E0, i0)
    h = partial_transformer(HN, i0)

    def hints(n: int) -> PartnerHint:
        # h(n) 的输入 ⟨i, ⟨q, p⟩⟩ 对应 e0 的输入 ⟨W_i ∪ W_g 的枚举, p⟩
        def hint(source: int, element: int) -> List[int]:
            i, rest = unpair(source)
            q, p = unpair(rest)
            merged = smn(UNION_ENUM, pair(pi04_g(i0, p, q, n), i))
            return [pair(merged, p)]
        return hint

    sets = CeRestriction(SetRelation.EQUALITY, View.RANGE)
    logger.info(f"[HYP] pi04({i0}): e0 = {e0}")
    return MembershipReduction("pi04_reduction", h, e0, JumpOf(sets), sets, hints)


def pi04_truth(i0: int, n: int, window: int = 4, fuel: int = 2_000) -> bool:
    """窗口内按 ∀p<w ∃q<w ∀m<w φ_i0(⟨p,q,m,n⟩)↓ 计算"""
    def halts(p: int, q: int, m: int) -> bool:
        return isinstance(evaluate(i0, tuple_code(p, q, m, n), fuel), Halted)

    return all(any(all(halts(p, q, m) for m in range(window)) for q in range(window))
               for p in range(window))


# ---------------------------------------------------------------- ⊆ 一侧的反例

# k ↦ {k}，k ↦ {k, k+1}
PAIRSET = encode(add(L, ifz(R, K(0), K(1))))


def _counter_e0():
    # j = 0 得 ∅；j = 2k+1 得 {k}；j = 2k+2 得 {k, k+1}
    k = o(L, R)
    single = curry(K(LEFT_INDEX), k)
    double = curry(K(PAIRSET), k)
    return ifz(I, K(EMPTY_SET), let(halves(pred(I)), ifz(o(R, R), single, double)))


COUNTER_E0 = encode(_counter_e0())


def _counter_member():
    # ⟨⟨⟨a, b⟩, k⟩, y⟩：偶数 y 在 k ∈ B 时输出 k，奇数 y 在 k ∈ A 时输出 k+1
    a, b, k = o(L, L, L), o(R, L, L), o(R, L)
    parity = o(R, halves(R))
    return ifz(parity, in_range(b, k), succ(in_range(a, k)))


COUNTER_MEMBER = encode(_counter_member())


def counterexample_pair(a_enum: int, b_enum: int, samples: int = 8,
                        fuel: int = 20_000) -> Tuple[int, int]:
    """返回 (e, e0)：e ⊆_{=^ce} e0，但 e 不与任何 e0 ∩ W_i 在跳跃下等价（B−A 非 c.e. 时）"""
    A, B = set_at(a_enum, fuel), set_at(b_enum, fuel)
    outside = sorted(x for x in A if x not in B)[:samples]
    if outside:
        raise ConstructionError("counterexample_pair", "A is not contained in B", witnesses=outside)
    e = partial_transformer(COUNTER_MEMBER, pair(a_enum, b_enum))
    return e, COUNTER_E0


def counterexample_hint(source: int, element: int) -> List[int]:
    """e 的第 k 项对应 e0 的第 2k+1 或 2k+2 项"""
    return [2 * source + 1, 2 * source + 2]


def counterexample_family(A: Iterable[int], B: Iterable[int], window: int) -> FrozenSet[FrozenSet[int]]:
    """{ran φ_{φ_e(k)} : k < window}"""
    A, B = frozenset(A), frozenset(B)
    family = set()
    for k in range(window):
        if k in A:
            family.add(frozenset({k, k + 1}))
        elif k in B:
            family.add(frozenset({k}))
        else:
            family.add(frozenset())
    return frozenset(family)


def _e0_set(j: int) -> FrozenSet[int]:
    if j == 0:
        return frozenset()
    k, r = divmod(j - 1, 2)
    return frozenset({k}) if r == 0 else frozenset({k, k + 1})


def counterexample_intersections(A: Iterable[int], B: Iterable[int], window: int) -> List[FrozenSet[int]]:
    """在窗口内穷举 W ⊆ {0, …, 2·window}，返回使 e 与 e0 ∩ W 跳跃等价的全部 W"""
    target = counterexample_family(A, B, window)
    indices = range(2 * window + 1)
    found = []
    for size in range(len(indices) + 1):
        for chosen in combinations(indices, size):
            if frozenset(_e0_set(j) for j in chosen) == target:
                found.append(frozenset(chosen))
    logger.debug(f"[HYP] counterexample window {window}: {len(found)} matching W")
    return found


def counterexample_machine_scan(e: int, e0: int, A: Iterable[int], B: Iterable[int], window: int,
                                stage: int) -> List[Dict[str, object]]:
    """在机器上核对 i-扫描：对主机预测的每个 W 及其单点改动，
    构造 e0 ∩ W 的编号并查询 e (=^ce)⁺ (e0 ∩ W)，与预测比较"""
    predicted = set(counterexample_intersections(A, B, window))
    candidates = set(predicted)
    for chosen in predicted:
        candidates.update(chosen ^ {j} for j in range(2 * window + 1))
    J = JumpOf(CeRestriction(SetRelation.EQUALITY, View.RANGE))
    rows = []
    for chosen in sorted(candidates, key=lambda w: (len(w), sorted(w))):
        restricted = smn(COMPOSE, pair(e0, finite_set_index(sorted(chosen))))
        verdict = query(J, e, restricted, stage)
        expected = chosen in predicted
        rows.append({
            "W": sorted(chosen),
            "predicted": expected,
            "answer": str(verdict.answer),
            "certainty": str(verdict.certainty),
            "agrees": verdict.related == expected,
        })
    logger.info(f"[HYP] 机器核对 {len(rows)} 个 W，"
                f"{sum(1 for row in rows if not row['agrees'])} 个与预测不符")
    return rows
