# -*- coding: utf-8 -*-
"""
机器内核
配对、程序语法与编号、带燃料的求值、分阶段枚举、smn 与不动点
"""

from app.kernel.enumeration import View, enumerate_W, enumerate_range, set_at, stream
from app.kernel.machine import Halted, OutOfFuel, Outcome, evaluate
from app.kernel.numbering import DIVERGE_INDEX, decode, encode
from app.kernel.pairing import pair, unpair
from app.kernel.recursion import SMN_OVERHEAD, const_index, fix, smn

__all__ = [
    "View", "enumerate_W", "enumerate_range", "set_at", "stream",
    "Halted", "OutOfFuel", "Outcome", "evaluate",
    "DIVERGE_INDEX", "decode", "encode",
    "pair", "unpair",
    "SMN_OVERHEAD", "const_index", "fix", "smn",
]
