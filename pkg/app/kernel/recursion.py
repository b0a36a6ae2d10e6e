# -*- coding: utf-8 -*-
"""
参数化与不动点
smn(e, x) 把第一个参数固定为 x；fix(f) 按 Kleene 第二递归定理构造。
"""

from functools import lru_cache

from app.kernel.numbering import decode, encode, is_canonical
from app.kernel.syntax import Comp, Const, Ident, Left, Pair, Right, Smn, Univ

# eval(smn(e, x), y, c·f + c) 与 eval(e, ⟨x,y⟩, f) 一致
SMN_OVERHEAD = 8

LEFT_INDEX = encode(Left())
IDENT_INDEX = encode(Ident())


@lru_cache(maxsize=65536)
def smn(e: int, x: int) -> int:
    """φ_{smn(e,x)}(y) ≃ φ_e(⟨x,y⟩)，对 (e, x) 单射"""
    if e < 0 or x < 0:
        raise ValueError(f"smn() expects naturals, got ({e}, {x})")
    if is_canonical(e):
        return encode(Comp(decode(e), Pair(Const(x), Ident())))
    return encode(Comp(Univ(), Pair(Const(e), Pair(Const(x), Ident()))))


def const_index(value: int) -> int:
    """常量映射: 值域恰为 {value} 的程序编号"""
    return smn(LEFT_INDEX, value)


# dd(⟨y, x⟩) = φ_{φ_y(y)}(x)
_DIAGONAL = Comp(Univ(), Pair(Comp(Univ(), Pair(Left(), Left())), Right()))
DIAGONAL_INDEX = encode(_DIAGONAL)


def fix(f: int) -> int:
    """对任意编号 f（视为全函数变换）返回 n 使 φ_n ≃ φ_{φ_f(n)}

    v(y) = φ_f(smn(dd, y))，n = smn(dd, v)。于是
    φ_n(x) = φ_{φ_v(v)}(x) = φ_{φ_f(smn(dd, v))}(x) = φ_{φ_f(n)}(x)。
    """
    v = encode(
        Comp(Univ(), Pair(Const(f), Comp(Smn(), Pair(Const(DIAGONAL_INDEX), Ident()))))
    )
    return smn(DIAGONAL_INDEX, v)


def transformer_of(template: int) -> int:
    """x ↦ smn(template, x) 的程序编号"""
    return encode(Comp(Smn(), Pair(Const(template), Ident())))


def quine() -> int:
    """φ_q(x) = q 对所有 x 成立"""
    return fix(transformer_of(LEFT_INDEX))
