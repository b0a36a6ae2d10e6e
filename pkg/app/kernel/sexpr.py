# -*- coding: utf-8 -*-
"""
程序的文本语法（S 表达式）

语法:
    expr  ::= ATOM | NUMBER | "(" FORM expr* ")"
    ATOM  ::= ident | succ | left | right | add | monus | div
            | univ | clock | smn | diverge
    NUMBER 表示常量函数 (const NUMBER)
    FORM  ::= const NUMBER | pair e e | comp e e | ifz e e e | while e e
            | prog NUMBER            ; 把编号解码后嵌入

例如 (comp succ (pair (const 3) ident))。
"""

import re
from typing import Iterator, List, Tuple, Union

from app.core.exception import ProgramSyntaxError
from app.kernel.numbering import decode
from app.kernel.syntax import (
    DIVERGE, Add, Clock, Comp, Const, Div, Ident, IfZero, Left, Monus, Pair,
    Program, Right, Smn, Succ, Univ, While, children,
)

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")

_ATOMS = {
    "ident": Ident, "succ": Succ, "left": Left, "right": Right, "add": Add,
    "monus": Monus, "div": Div, "univ": Univ, "clock": Clock, "smn": Smn,
}

_FORMS = {"pair": (Pair, 2), "comp": (Comp, 2), "ifz": (IfZero, 3), "while": (While, 2)}

_NAMES = {cls: name for name, cls in _ATOMS.items()}
_FORM_NAMES = {cls: name for name, (cls, _) in _FORMS.items()}


def _tokens(text: str) -> Iterator[Tuple[str, int]]:
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            return
        match = _TOKEN.match(text, pos)
        if not match:
            raise ProgramSyntaxError("unexpected character", text, pos)
        token = match.group(1) or match.group(2) or match.group(3)
        yield token, match.start(match.lastindex)
        pos = match.end()


def _natural(token: str, text: str, pos: int) -> int:
    if not token.isdigit():
        raise ProgramSyntaxError(f"expected a natural number, got '{token}'", text, pos)
    return int(token)


def parse(text: str) -> Program:
    """文本 → 程序"""
    tokens: List[Tuple[str, int]] = list(_tokens(text))
    if not tokens:
        raise ProgramSyntaxError("empty program text", text, 0)
    try:
        program, pos = _parse_expr(tokens, 0, text)
    except RecursionError:
        raise ProgramSyntaxError("program text nested too deeply", text, 0) from None
    if pos != len(tokens):
        raise ProgramSyntaxError("trailing input", text, tokens[pos][1])
    return program


def _parse_expr(tokens: List[Tuple[str, int]], i: int, text: str) -> Tuple[Program, int]:
    if i >= len(tokens):
        raise ProgramSyntaxError("unexpected end of input", text, len(text))
    token, pos = tokens[i]
    if token == ")":
        raise ProgramSyntaxError("unexpected ')'", text, pos)
    if token != "(":
        if token in _ATOMS:
            return _ATOMS[token](), i + 1
        if token == "diverge":
            return DIVERGE, i + 1
        return Const(_natural(token, text, pos)), i + 1

    if i + 1 >= len(tokens):
        raise ProgramSyntaxError("unexpected end of input", text, len(text))
    head, head_pos = tokens[i + 1]
    i += 2
    if head in ("const", "prog"):
        if i >= len(tokens):
            raise ProgramSyntaxError("unexpected end of input", text, len(text))
        value = _natural(tokens[i][0], text, tokens[i][1])
        node: Program = Const(value) if head == "const" else decode(value)
        i += 1
    elif head in _FORMS:
        cls, arity = _FORMS[head]
        parts = []
        for _ in range(arity):
            part, i = _parse_expr(tokens, i, text)
            parts.append(part)
        node = cls(*parts)
    else:
        raise ProgramSyntaxError(f"unknown form '{head}'", text, head_pos)
    if i >= len(tokens) or tokens[i][0] != ")":
        raise ProgramSyntaxError(f"expected ')' to close '{head}'", text, head_pos)
    return node, i + 1


def to_text(program: Program) -> str:
    """程序 → 文本；parse(to_text(p)) == p"""
    out: List[str] = []
    stack: List[Union[Program, str]] = [program]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif isinstance(item, Const):
            out.append(str(item.value))
        elif item == DIVERGE:
            out.append("diverge")
        elif type(item) in _NAMES:
            out.append(_NAMES[type(item)])
        else:
            out.append(f"({_FORM_NAMES[type(item)]}")
            stack.append(")")
            for child in reversed(children(item)):
                stack.extend((child, " "))
    return "".join(out)
