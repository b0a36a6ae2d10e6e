# -*- coding: utf-8 -*-
"""
组合子与程序目录

上半部分是构造程序树的小型组合子（状态用右嵌套元组表示）；
下半部分是若干通用模板以及 TransformerSpec → 编号 的编译目录。
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, Optional, Tuple, Type, Union

from app.core.exception import ConstructionError
from app.kernel.analysis import register_certifier
from app.kernel.numbering import encode
from app.kernel.pairing import decode_list, list_code, pair, set_code
from app.kernel.recursion import const_index, smn
from app.kernel.syntax import (
    DIVERGE, Add, Clock, Comp, Const, Div, Ident, IfZero, Left, Monus, Pair,
    Program, Right, Smn, Succ, Univ, While,
)

logger = logging.getLogger(__name__)

I: Program = Ident()
L: Program = Left()
R: Program = Right()


def K(value: int) -> Program:
    return Const(value)


def o(*programs: Program) -> Program:
    """o(f, g, h)(x) = f(g(h(x)))"""
    if not programs:
        return I
    result = programs[-1]
    for program in reversed(programs[:-1]):
        result = Comp(program, result)
    return result


def tup(*programs: Program) -> Program:
    """x ↦ ⟨f₀(x), ⟨f₁(x), …⟩⟩"""
    result = programs[-1]
    for program in reversed(programs[:-1]):
        result = Pair(program, result)
    return result


def nth(i: int, arity: int) -> Program:
    """右嵌套 arity 元组的第 i 个分量"""
    if not 0 <= i < arity:
        raise ValueError(f"component {i} out of range for arity {arity}")
    rights = [R] * i
    if i < arity - 1:
        return o(L, *rights)
    return o(*rights) if rights else I


def add(f: Program, g: Program) -> Program:
    return Comp(Add(), Pair(f, g))


def sub(f: Program, g: Program) -> Program:
    return Comp(Monus(), Pair(f, g))


def div(f: Program, g: Program) -> Program:
    return Comp(Div(), Pair(f, g))


def succ(f: Program) -> Program:
    return Comp(Succ(), f)


def pred(f: Program) -> Program:
    return sub(f, K(1))


def ne(f: Program, g: Program) -> Program:
    """两值相等时为 0"""
    return add(sub(f, g), sub(g, f))


def lt(f: Program, g: Program) -> Program:
    """f < g 时非 0"""
    return sub(g, f)


def falsy(f: Program) -> Program:
    """f = 0 时为 1，否则为 0"""
    return sub(K(1), f)


def apply(fe: Program, fx: Program) -> Program:
    """x ↦ φ_{fe(x)}(fx(x))"""
    return Comp(Univ(), Pair(fe, fx))


def call(index: int, fx: Program) -> Program:
    return apply(K(index), fx)


def curry(fe: Program, fx: Program) -> Program:
    """x ↦ smn(fe(x), fx(x))"""
    return Comp(Smn(), Pair(fe, fx))


def clock(fe: Program, fn: Program, ft: Program) -> Program:
    """x ↦ v+1 若 φ_{fe(x)}(fn(x)) 在 ft(x) 步内停机得 v，否则 0"""
    return Comp(Clock(), Pair(fe, Pair(fn, ft)))


def ifz(test: Program, then: Program, orelse: Program) -> Program:
    return IfZero(test, then, orelse)


def loop(test: Program, body: Program) -> Program:
    return While(test, body)


def guard(test: Program, value: Program) -> Program:
    """test = 0 时得 value，否则发散"""
    return IfZero(test, value, DIVERGE)


def let(value: Program, body: Program) -> Program:
    """先把状态扩展为 ⟨x, value(x)⟩ 再执行 body"""
    return o(body, tup(I, value))


def head(f: Program) -> Program:
    return o(L, pred(f))


def tail(f: Program) -> Program:
    return o(R, pred(f))


# ---------------------------------------------------------------- 通用模板

def _list_enum() -> Program:
    # ⟨lst, k⟩ ↦ lst 的第 min(k, len-1) 个元素；空表发散
    test = ifz(R, K(0), tail(L))
    body = tup(tail(L), pred(R))
    return guard(falsy(L), head(o(L, loop(test, body))))


LIST_ENUM_PROGRAM = _list_enum()
LIST_ENUM = encode(LIST_ENUM_PROGRAM)


def _finite_list_range(code: int) -> Optional[FrozenSet[int]]:
    return frozenset(decode_list(code))


register_certifier(LIST_ENUM_PROGRAM, _finite_list_range)


def list_index(items: Iterable[int]) -> int:
    """按给定次序枚举 items 的程序编号（空表得空值域）"""
    return smn(LIST_ENUM, list_code(items))


def finite_set_index(elements: Iterable[int]) -> int:
    """有限集合的规范枚举编号"""
    return smn(LIST_ENUM, set_code(list(elements)))


EMPTY_SET = finite_set_index(())


def halves(f: Program) -> Program:
    """x ↦ ⟨⌊f/2⌋, f mod 2⟩"""
    half = div(f, K(2))
    return o(Pair(L, sub(R, add(L, L))), Pair(half, f))


def _union_range() -> Program:
    # ⟨⟨e0, i⟩, y⟩：y = 2k 取 φ_e0(k)；y = 2k+1 时若 k ∈ W_i 则输出 k
    params = o(L, L)
    k, parity = o(L, R), o(R, R)
    from_e0 = apply(o(L, params), k)
    from_w = o(R, Pair(apply(o(R, params), k), k))
    return let(halves(R), ifz(parity, from_e0, from_w))


UNION_RANGE = encode(_union_range())


def _union_enum() -> Program:
    # ⟨⟨e0, i⟩, y⟩：y = 2k 取 φ_e0(k)，y = 2k+1 取 φ_i(k)
    params = o(L, L)
    k, parity = o(L, R), o(R, R)
    return let(halves(R), ifz(parity, apply(o(L, params), k), apply(o(R, params), k)))


UNION_ENUM = encode(_union_enum())


def _domain_to_range() -> Program:
    # ⟨e, x⟩ ↦ x 若 φ_e(x) 停机
    return o(R, Pair(apply(L, R), R))


DOMAIN_TO_RANGE = encode(_domain_to_range())


def _union_domain() -> Program:
    # ⟨⟨i, j⟩, x⟩ 停机当且仅当 x ∈ W_i ∪ W_j；状态 ⟨⟨i,j⟩, x, t⟩
    state_i, state_j = o(L, nth(0, 3)), o(R, nth(0, 3))
    x, t = nth(1, 3), nth(2, 3)
    pending = ifz(clock(state_i, x, t), ifz(clock(state_j, x, t), K(1), K(0)), K(0))
    body = tup(nth(0, 3), x, succ(t))
    return o(K(0), loop(pending, body), tup(L, R, K(0)))


UNION_DOMAIN = encode(_union_domain())


def _compose() -> Program:
    # ⟨⟨f, g⟩, x⟩ ↦ φ_f(φ_g(x))
    return apply(o(L, L), apply(o(R, L), R))


COMPOSE = encode(_compose())


def _column() -> Program:
    # ⟨⟨e, k⟩, n⟩ ↦ p 若 φ_e(n) = ⟨k, p⟩
    value = apply(o(L, L), R)
    return let(value, guard(ne(o(L, R), o(R, L, L)), o(R, R)))


COLUMN = encode(_column())


def cons(fh: Program, ft: Program) -> Program:
    return succ(Pair(fh, ft))


def _table(values: Tuple[int, ...], lo: int, hi: int) -> Program:
    if lo == hi:
        return K(values[lo])
    mid = (lo + hi) // 2
    return ifz(sub(I, K(mid)), _table(values, lo, mid), _table(values, mid + 1, hi))


def table_program(values: Iterable[int]) -> Program:
    """φ(k) = values[min(k, len-1)]，二分查表；空表发散"""
    values = tuple(values)
    if not values:
        return DIVERGE
    return _table(values, 0, len(values) - 1)


def table_index(values: Iterable[int]) -> int:
    return encode(table_program(values))


def _member() -> Program:
    # ⟨x, lst⟩ ↦ 1 若 x 在 lst 中，否则 0
    test = ifz(R, K(0), ne(head(R), L))
    return o(ifz(R, K(0), K(1)), loop(test, tup(L, tail(R))))


MEMBER = encode(_member())


def member(fx: Program, flist: Program) -> Program:
    return call(MEMBER, Pair(fx, flist))


def _list_min() -> Program:
    # lst ↦ 1 + min(lst)，空表得 0；状态 ⟨best+1, lst⟩
    take = ifz(L, succ(head(R)),
               ifz(sub(head(R), pred(L)), succ(head(R)), L))
    body = Pair(take, tail(R))
    return o(L, loop(R, body), Pair(K(0), I))


LIST_MIN = encode(_list_min())


def _seeds() -> Program:
    # ⟨e, t⟩ ↦ {φ_e(k) : k < t 且在 t 步内停机}（表码，无重复）
    # 状态 ⟨e, t, k, acc⟩
    e, t, k, acc = (nth(i, 4) for i in range(4))
    value = clock(e, k, t)
    # 在 ⟨state, value⟩ 上
    s_acc = o(acc, L)
    fresh = ifz(R, s_acc, ifz(member(pred(R), s_acc), cons(pred(R), s_acc), s_acc))
    body = tup(e, t, succ(k), let(value, fresh))
    start = tup(L, R, K(0), K(0))
    return o(acc, loop(lt(k, t), body), start)


SEEDS = encode(_seeds())


def _in_range() -> Program:
    # ⟨f, n⟩ ↦ n 若 n ∈ ran φ_f，否则发散；状态 ⟨f, n, t⟩，t 逐次加倍
    f, n, t = (nth(i, 3) for i in range(3))
    found = member(n, call(SEEDS, Pair(f, t)))
    return o(n, loop(falsy(found), tup(f, n, succ(add(t, t)))), tup(L, R, K(1)))


IN_RANGE = encode(_in_range())


def in_range(ff: Program, fn: Program) -> Program:
    return call(IN_RANGE, Pair(ff, fn))


def _class() -> Program:
    # ⟨c, ⟨S, t⟩⟩ ↦ S 在边集 {φ_c(k) : k < t，t 步内停机} 下的等价闭包（表码）
    # 状态 ⟨c, t, S, changed, k⟩；k = t 且 changed ≠ 0 时开始新一轮
    c, t, S, changed, k = (nth(i, 5) for i in range(5))
    edge = clock(c, k, t)
    # ⟨⟨state, edge⟩, ⟨mx, my⟩⟩
    st = o(L, L)
    x = o(L, pred(o(R, L)))
    y = o(R, pred(o(R, L)))
    mx, my = o(L, R), o(R, R)
    s_S, s_changed = o(S, st), o(changed, st)
    new_S = ifz(mx, ifz(my, s_S, cons(x, s_S)), ifz(my, cons(y, s_S), s_S))
    new_changed = ifz(mx, ifz(my, s_changed, K(1)), ifz(my, K(1), s_changed))
    update = tup(o(c, st), o(t, st), new_S, new_changed, succ(o(k, st)))
    # 在 ⟨state, edge⟩ 上
    memberships = Pair(member(o(L, pred(R)), o(S, L)), member(o(R, pred(R)), o(S, L)))
    with_edge = let(memberships, update)
    process = let(edge, ifz(R, tup(o(c, L), o(t, L), o(S, L), o(changed, L), succ(o(k, L))),
                            with_edge))
    restart = tup(c, t, S, K(0), K(0))
    body = ifz(lt(k, t), restart, process)
    test = add(lt(k, t), changed)
    start = tup(L, o(R, R), o(L, R), K(1), o(R, R))
    return o(S, loop(test, body), start)


CLASS = encode(_class())


def class_of(fc: Program, fseeds: Program, ft: Program) -> Program:
    return call(CLASS, tup(fc, fseeds, ft))


def _closure() -> Program:
    # ⟨c, ⟨a, b⟩⟩ ↦ ⟨a, b⟩ 若 b 落入 a 在 ran φ_c 生成的等价关系中的类；
    # 状态 ⟨c, a, b, t⟩，t 逐次加倍
    c, a, b, t = (nth(i, 4) for i in range(4))
    found = member(b, class_of(c, cons(a, K(0)), t))
    body = tup(c, a, b, succ(add(t, t)))
    start = tup(L, o(L, R), o(R, R), K(1))
    return o(Pair(a, b), loop(falsy(found), body), start)


CLOSURE = encode(_closure())


def closure_pairs(fc: Program, fa: Program, fb: Program) -> Program:
    return call(CLOSURE, Pair(fc, Pair(fa, fb)))


def partial_transformer(template: int, fixed: int) -> int:
    """x ↦ smn(template, ⟨fixed, x⟩) 的程序编号"""
    return encode(curry(K(template), Pair(K(fixed), I)))


# ---------------------------------------------------------------- 编译目录

@dataclass(frozen=True)
class ConstantSet:
    """值域为 {value}"""
    value: int


@dataclass(frozen=True)
class FiniteSet:
    elements: Tuple[int, ...]


@dataclass(frozen=True)
class Compose:
    """φ(x) = φ_outer(φ_inner(x))"""
    outer: int
    inner: int


@dataclass(frozen=True)
class ColumnSelect:
    """值域为 ran φ_e 的第 column 列"""
    e: int
    column: int


@dataclass(frozen=True)
class UnionRange:
    """值域为 W_i ∪ ran φ_e0"""
    e0: int
    i: int


@dataclass(frozen=True)
class UnionDomain:
    """定义域为 W_i ∪ W_j"""
    i: int
    j: int


@dataclass(frozen=True)
class DomainToRange:
    """值域为 W_e"""
    e: int


@dataclass(frozen=True)
class EquivalenceClosure:
    """值域为 ran φ_c（作为边集）生成的等价关系的全部配对"""
    c: int


@dataclass(frozen=True)
class Curried:
    """x ↦ smn(template, x)"""
    template: int


TransformerSpec = Union[ConstantSet, FiniteSet, Compose, ColumnSelect, UnionRange,
                        UnionDomain, DomainToRange, EquivalenceClosure, Curried]

_COMPILERS: Dict[Type, Callable[..., int]] = {
    ConstantSet: lambda s: const_index(s.value),
    FiniteSet: lambda s: finite_set_index(s.elements),
    Compose: lambda s: smn(COMPOSE, pair(s.outer, s.inner)),
    ColumnSelect: lambda s: smn(COLUMN, pair(s.e, s.column)),
    UnionRange: lambda s: smn(UNION_RANGE, pair(s.e0, s.i)),
    UnionDomain: lambda s: smn(UNION_DOMAIN, pair(s.i, s.j)),
    DomainToRange: lambda s: smn(DOMAIN_TO_RANGE, s.e),
    EquivalenceClosure: lambda s: smn(CLOSURE, s.c),
    Curried: lambda s: encode(curry(K(s.template), I)),
}


def compile_spec(spec: TransformerSpec) -> int:
    """TransformerSpec → 程序编号"""
    compiler = _COMPILERS.get(type(spec))
    if compiler is None:
        raise ConstructionError("compile_spec", f"not a transformer spec: {spec!r}")
    index = compiler(spec)
    logger.debug(f"[CATALOG] {spec} -> {index}")
    return index
