# -*- coding: utf-8 -*-
"""
配对函数
Cantor 配对 ⟨m,n⟩ ↔ ℕ，以及基于它的元组与有限表编码
"""

from math import isqrt
from typing import Iterable, List, Sequence, Tuple


def pair(m: int, n: int) -> int:
    """Cantor 配对: pair(m, n) = (m+n)(m+n+1)/2 + n

    Args:
        m: 左分量
        n: 右分量

    Returns:
        int: 配对编码
    """
    if m < 0 or n < 0:
        raise ValueError(f"pair() expects naturals, got ({m}, {n})")
    s = m + n
    return s * (s + 1) // 2 + n


def unpair(k: int) -> Tuple[int, int]:
    """pair 的逆"""
    if k < 0:
        raise ValueError(f"unpair() expects a natural, got {k}")
    w = (isqrt(8 * k + 1) - 1) // 2
    n = k - w * (w + 1) // 2
    return w - n, n


def left(k: int) -> int:
    return unpair(k)[0]


def right(k: int) -> int:
    return unpair(k)[1]


def tuple_code(*items: int) -> int:
    """右嵌套元组 ⟨a, b, c⟩ = pair(a, pair(b, c))"""
    if not items:
        raise ValueError("tuple_code() needs at least one component")
    code = items[-1]
    for item in reversed(items[:-1]):
        code = pair(item, code)
    return code


def untuple(code: int, arity: int) -> Tuple[int, ...]:
    """tuple_code 的逆"""
    if arity < 1:
        raise ValueError(f"arity must be positive, got {arity}")
    parts: List[int] = []
    for _ in range(arity - 1):
        head, code = unpair(code)
        parts.append(head)
    parts.append(code)
    return tuple(parts)


# 有限表: nil = 0, cons(h, t) = 1 + pair(h, t)
NIL = 0


def cons(head: int, tail: int) -> int:
    return 1 + pair(head, tail)


def list_code(items: Iterable[int]) -> int:
    """把有限序列编码为表码"""
    code = NIL
    for item in reversed(list(items)):
        code = cons(item, code)
    return code


def decode_list(code: int) -> List[int]:
    """表码的逆；每个自然数都是某个表的编码"""
    items: List[int] = []
    while code != NIL:
        head, code = unpair(code - 1)
        items.append(head)
    return items


def set_code(elements: Sequence[int]) -> int:
    """有限集合的规范表码（严格递增）"""
    return list_code(sorted(set(elements)))
