# -*- coding: utf-8 -*-
"""
程序编号
程序按前缀序写成半字节流，再把半字节流读作双射十六进制数得到编号。
Const 的取值写成：长度（八进制续位编码）+ 十六进制数字。
不能恰好解码为一个程序的自然数（0、截断流、多余半字节、非规范常量、
半字节 15）一律表示规范发散程序 DIVERGE。
"""

import logging
from functools import lru_cache
from typing import List, Tuple

from app.kernel.syntax import (
    ARITY, DIVERGE, LEAF_TYPES, NODE_TYPES, Const, Opcode, Program, children,
)

logger = logging.getLogger(__name__)

_MORE = 8


class _Malformed(Exception):
    pass


def _length_nibbles(length: int) -> List[int]:
    groups = []
    while True:
        groups.append(length & 7)
        length >>= 3
        if length == 0:
            break
    groups.reverse()
    return [g | _MORE for g in groups[:-1]] + [groups[-1]]


def _const_nibbles(value: int) -> List[int]:
    digits = [int(c, 16) for c in format(value, "x")] if value else []
    return _length_nibbles(len(digits)) + digits


def to_nibbles(program: Program) -> List[int]:
    """程序的前缀序半字节流"""
    out: List[int] = []
    stack = [program]
    while stack:
        node = stack.pop()
        out.append(int(node.opcode))
        if isinstance(node, Const):
            out.extend(_const_nibbles(node.value))
        stack.extend(reversed(children(node)))
    return out


def nibbles_to_index(nibbles: List[int]) -> int:
    index = 0
    for nibble in nibbles:
        index = index * 16 + nibble + 1
    return index


def index_to_nibbles(index: int) -> List[int]:
    digits: List[int] = []
    while index > 0:
        index -= 1
        digits.append(index % 16)
        index //= 16
    digits.reverse()
    return digits


def encode(program: Program) -> int:
    """程序 → 编号"""
    return nibbles_to_index(to_nibbles(program))


def _read_const(nibbles: List[int], pos: int) -> Tuple[int, int]:
    length = 0
    first = True
    while True:
        if pos >= len(nibbles):
            raise _Malformed("truncated constant length")
        nibble = nibbles[pos]
        pos += 1
        group = nibble & 7
        if first and group == 0 and nibble & _MORE:
            raise _Malformed("leading zero in constant length")
        first = False
        length = (length << 3) | group
        if not nibble & _MORE:
            break
    if pos + length > len(nibbles):
        raise _Malformed("truncated constant digits")
    digits = nibbles[pos:pos + length]
    if digits and digits[0] == 0:
        raise _Malformed("leading zero in constant")
    value = 0
    for digit in digits:
        value = value * 16 + digit
    return value, pos + length


def _parse(nibbles: List[int], pos: int) -> Tuple[Program, int]:
    # 显式栈：每帧为 (操作码, 已读出的子节点)，树的深度不受调用栈限制
    pending: List[Tuple[Opcode, List[Program]]] = []
    while True:
        if pos >= len(nibbles):
            raise _Malformed("truncated program")
        nibble = nibbles[pos]
        if nibble > Opcode.SMN:
            raise _Malformed(f"unused opcode {nibble}")
        op = Opcode(nibble)
        pos += 1
        if op == Opcode.CONST:
            value, pos = _read_const(nibbles, pos)
            node: Program = Const(value)
        elif op in LEAF_TYPES:
            node = LEAF_TYPES[op]()
        else:
            pending.append((op, []))
            continue
        while pending:
            parent, parts = pending[-1]
            parts.append(node)
            if len(parts) < ARITY[parent]:
                break
            pending.pop()
            node = NODE_TYPES[parent](*parts)
        else:
            return node, pos


@lru_cache(maxsize=65536)
def decode(index: int) -> Program:
    """编号 → 程序；每个自然数都能解码"""
    if index < 0:
        raise ValueError(f"program index must be a natural, got {index}")
    nibbles = index_to_nibbles(index)
    try:
        program, pos = _parse(nibbles, 0)
        if pos != len(nibbles):
            raise _Malformed("trailing nibbles")
        return program
    except _Malformed:
        return DIVERGE


@lru_cache(maxsize=65536)
def is_canonical(index: int) -> bool:
    """encode(decode(index)) == index"""
    return encode(decode(index)) == index


DIVERGE_INDEX = encode(DIVERGE)
