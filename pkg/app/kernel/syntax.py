# -*- coding: utf-8 -*-
"""
程序语法树
机器程序是由 15 种节点构成的不可变树，每种节点占一个操作码半字节
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Tuple, Union


class Opcode(IntEnum):
    """节点操作码（半字节取值）"""
    IDENT = 0
    SUCC = 1
    LEFT = 2
    RIGHT = 3
    CONST = 4
    ADD = 5
    MONUS = 6
    DIV = 7
    PAIR = 8
    COMP = 9
    IFZERO = 10
    WHILE = 11
    UNIV = 12
    CLOCK = 13
    SMN = 14


ARITY = {
    Opcode.IDENT: 0, Opcode.SUCC: 0, Opcode.LEFT: 0, Opcode.RIGHT: 0,
    Opcode.CONST: 0, Opcode.ADD: 0, Opcode.MONUS: 0, Opcode.DIV: 0,
    Opcode.PAIR: 2, Opcode.COMP: 2, Opcode.IFZERO: 3, Opcode.WHILE: 2,
    Opcode.UNIV: 0, Opcode.CLOCK: 0, Opcode.SMN: 0,
}


@dataclass(frozen=True)
class Ident:
    opcode = Opcode.IDENT


@dataclass(frozen=True)
class Succ:
    opcode = Opcode.SUCC


@dataclass(frozen=True)
class Left:
    """⟨a,b⟩ ↦ a"""
    opcode = Opcode.LEFT


@dataclass(frozen=True)
class Right:
    """⟨a,b⟩ ↦ b"""
    opcode = Opcode.RIGHT


@dataclass(frozen=True)
class Const:
    value: int
    opcode = Opcode.CONST

    def __post_init__(self):
        if self.value < 0:
            raise ValueError(f"Const expects a natural, got {self.value}")


@dataclass(frozen=True)
class Add:
    """⟨a,b⟩ ↦ a + b"""
    opcode = Opcode.ADD


@dataclass(frozen=True)
class Monus:
    """⟨a,b⟩ ↦ max(a - b, 0)"""
    opcode = Opcode.MONUS


@dataclass(frozen=True)
class Div:
    """⟨a,b⟩ ↦ a // b，除数为 0 时得 0"""
    opcode = Opcode.DIV


@dataclass(frozen=True)
class Pair:
    """x ↦ ⟨f(x), g(x)⟩"""
    first: "Program"
    second: "Program"
    opcode = Opcode.PAIR


@dataclass(frozen=True)
class Comp:
    """x ↦ outer(inner(x))"""
    outer: "Program"
    inner: "Program"
    opcode = Opcode.COMP


@dataclass(frozen=True)
class IfZero:
    test: "Program"
    then: "Program"
    orelse: "Program"
    opcode = Opcode.IFZERO


@dataclass(frozen=True)
class While:
    """当 test(x) ≠ 0 时反复 x := body(x)，最后返回 x"""
    test: "Program"
    body: "Program"
    opcode = Opcode.WHILE


@dataclass(frozen=True)
class Univ:
    """⟨e,n⟩ ↦ φ_e(n)，与调用者共享燃料"""
    opcode = Opcode.UNIV


@dataclass(frozen=True)
class Clock:
    """⟨e,⟨n,t⟩⟩ ↦ v+1（t 步内停机得 v），否则 0"""
    opcode = Opcode.CLOCK


@dataclass(frozen=True)
class Smn:
    """⟨e,x⟩ ↦ smn(e, x)"""
    opcode = Opcode.SMN


Program = Union[
    Ident, Succ, Left, Right, Const, Add, Monus, Div,
    Pair, Comp, IfZero, While, Univ, Clock, Smn,
]

LEAF_TYPES = {
    Opcode.IDENT: Ident, Opcode.SUCC: Succ, Opcode.LEFT: Left,
    Opcode.RIGHT: Right, Opcode.ADD: Add, Opcode.MONUS: Monus,
    Opcode.DIV: Div, Opcode.UNIV: Univ, Opcode.CLOCK: Clock, Opcode.SMN: Smn,
}

NODE_TYPES = {
    Opcode.PAIR: Pair, Opcode.COMP: Comp, Opcode.IFZERO: IfZero,
    Opcode.WHILE: While,
}


def children(program: Program) -> Tuple[Program, ...]:
    """按前缀序返回子节点"""
    if isinstance(program, Pair):
        return (program.first, program.second)
    if isinstance(program, Comp):
        return (program.outer, program.inner)
    if isinstance(program, IfZero):
        return (program.test, program.then, program.orelse)
    if isinstance(program, While):
        return (program.test, program.body)
    return ()


def size(program: Program) -> int:
    """节点数"""
    total = 0
    stack = [program]
    while stack:
        node = stack.pop()
        total += 1
        stack.extend(children(node))
    return total


DIVERGE: Program = While(Const(1), Ident())
