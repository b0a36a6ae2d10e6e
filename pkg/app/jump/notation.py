# -*- coding: utf-8 -*-
"""
序数记号

主机侧用 One / Successor / Limit 表示记号；对外的 Kleene 编码为
1、2^b、3·5^e，只在位宽不超过上限时物化。机器内部使用紧凑编码：
    One ↦ 0，Successor(b) ↦ 1 + ⟨0, c(b)⟩，Limit(e) ↦ 1 + ⟨1, e⟩
Limit(e) 的 φ_e(n) 输出紧凑编码。+_O 在第二个参数上右递归：
    a + One = a，a + Succ(b) = Succ(a + b)，a + Lim(e) = Lim(n ↦ a + φ_e(n))
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Union

from app.core.exception import NotationError
from app.kernel.catalog import (
    I, K, L, R, Pair, add, apply, curry, falsy, ifz, loop, nth, o, pred, succ, tup,
)
from app.kernel.machine import Halted, evaluate
from app.kernel.numbering import encode
from app.kernel.pairing import pair, unpair
from app.kernel.recursion import fix, smn, transformer_of

logger = logging.getLogger(__name__)

N_CHECK = 8
KLEENE_CODE_CAP_BITS = 4096


@dataclass(frozen=True)
class One:
    """0 的记号"""


@dataclass(frozen=True)
class Successor:
    base: "Notation"


@dataclass(frozen=True)
class Limit:
    """sup_n |φ_e(n)|"""
    sequence: int
    witness: str = field(default="", compare=False)


Notation = Union[One, Successor, Limit]

ONE_CODE = 0


def succ_code(code: int) -> int:
    return 1 + pair(0, code)


def lim_code(e: int) -> int:
    return 1 + pair(1, e)


def compact(a: Notation) -> int:
    """记号 → 紧凑编码"""
    layers = 0
    while isinstance(a, Successor):
        layers += 1
        a = a.base
    code = lim_code(a.sequence) if isinstance(a, Limit) else ONE_CODE
    for _ in range(layers):
        code = succ_code(code)
    return code


def from_compact(code: int) -> Notation:
    """紧凑编码 → 记号；标签不是 0/1 的编码被拒绝"""
    layers = 0
    while code != ONE_CODE:
        tag, payload = unpair(code - 1)
        if tag == 0:
            layers += 1
            code = payload
            continue
        if tag != 1:
            raise NotationError(f"malformed compact notation code (tag {tag})", code=code)
        base: Notation = Limit(payload)
        break
    else:
        base = One()
    for _ in range(layers):
        base = Successor(base)
    return base


def kleene_code(a: Notation, cap_bits: int = KLEENE_CODE_CAP_BITS) -> int:
    """Kleene 编码 1 / 2^b / 3·5^e；超出位宽上限时报错"""
    if isinstance(a, One):
        return 1
    if isinstance(a, Successor):
        inner = kleene_code(a.base, cap_bits)
        if inner > cap_bits:
            raise NotationError("Kleene code too large to materialize", bits=inner)
        return 1 << inner
    if a.sequence * 2.33 > cap_bits:
        raise NotationError("Kleene code too large to materialize", sequence=a.sequence)
    return 3 * 5 ** a.sequence


def from_kleene(code: int) -> Notation:
    if code < 1:
        raise NotationError(f"not a notation code: {code}", code=code)
    if code == 1:
        return One()
    if code > 1 and code & (code - 1) == 0:
        return Successor(from_kleene(code.bit_length() - 1))
    if code % 3 == 0:
        rest, e = code // 3, 0
        while rest % 5 == 0:
            rest //= 5
            e += 1
        if rest == 1:
            return Limit(e)
    raise NotationError(f"not a notation code: {code}", code=code)


def finite_value(a: Notation) -> int:
    """由 One 与 Successor 构成的显式树的序数值"""
    value = 0
    while isinstance(a, Successor):
        value += 1
        a = a.base
    if isinstance(a, Limit):
        raise NotationError("notation is not finite", sequence=a.sequence)
    return value


def finite_notation(n: int) -> Notation:
    a: Notation = One()
    for _ in range(n):
        a = Successor(a)
    return a


def describe(a: Notation) -> str:
    layers = 0
    while isinstance(a, Successor):
        layers += 1
        a = a.base
    if isinstance(a, One):
        return str(layers)
    head = f"lim[{a.sequence}]"
    return head if layers == 0 else f"{head}+{layers}"


# ---------------------------------------------------------------- 机器内 +_O

def _nadd_body():
    # ⟨z, ⟨a, b⟩⟩；z 是 NADD 自身
    z, a, b, k = (nth(i, 4) for i in range(4))
    peel = tup(z, a, o(R, pred(b)), succ(k))
    is_succ_layer = ifz(b, K(0), falsy(o(L, pred(b))))
    lim_case = succ(Pair(K(1), curry(K(NLIM), Pair(Pair(z, a), o(R, pred(b))))))
    base = Pair(ifz(b, a, lim_case), k)
    wrap = loop(R, Pair(succ(Pair(K(0), L)), pred(R)))
    start = tup(L, o(L, R), o(R, R), K(0))
    return o(L, wrap, base, loop(is_succ_layer, peel), start)


# ⟨⟨⟨z, a⟩, e⟩, n⟩ ↦ φ_z(⟨a, φ_e(n)⟩)
NLIM = encode(apply(o(L, L, L), Pair(o(R, L, L), apply(o(R, L), R))))
NADD_BODY = encode(_nadd_body())
NADD = fix(transformer_of(NADD_BODY))


def notation_succ(b: Notation) -> Notation:
    return Successor(b)


def notation_add(a: Notation, b: Notation) -> Notation:
    """a +_O b，与机器内 NADD 的输出编码一致"""
    layers = 0
    while isinstance(b, Successor):
        layers += 1
        b = b.base
    if isinstance(b, One):
        result = a
    else:
        result = Limit(smn(NLIM, pair(pair(NADD, compact(a)), b.sequence)))
    for _ in range(layers):
        result = Successor(result)
    return result


@lru_cache(maxsize=4096)
def _term(e: int, n: int, fuel: int) -> Optional[int]:
    outcome = evaluate(e, n, fuel)
    return outcome.value if isinstance(outcome, Halted) else None


def terms(e: int, count: int = N_CHECK, fuel: int = 100_000) -> List[Notation]:
    """φ_e(0..count-1) 作为记号；不停机或编码不合法时报错"""
    result = []
    for n in range(count):
        code = _term(e, n, fuel)
        if code is None:
            raise NotationError(f"limit sequence diverges at {n} within fuel", sequence=e, n=n)
        result.append(from_compact(code))
    return result


def precedes(a: Notation, b: Notation, depth: int = 3, fuel: int = 100_000) -> bool:
    """a <_O b 在片段上的抽样判定"""
    if isinstance(b, One):
        return False
    if isinstance(b, Successor):
        return compact(a) == compact(b.base) or precedes(a, b.base, depth, fuel)
    if depth <= 0:
        return False
    for term in terms(b.sequence, N_CHECK, fuel):
        if compact(a) == compact(term) or precedes(a, term, depth - 1, fuel):
            return True
    return False


def notation_lim(e: int, witness: str = "", n_check: int = N_CHECK, fuel: int = 100_000) -> Limit:
    """构造 Lim(e)，并抽样检查前 n_check 项严格递增"""
    sampled = terms(e, n_check, fuel)
    for n in range(len(sampled) - 1):
        if not precedes(sampled[n], sampled[n + 1], fuel=fuel):
            raise NotationError(
                f"limit sequence is not increasing at {n}", sequence=e, n=n,
            )
    logger.debug(f"[NOTATION] Lim({e}) 通过 {n_check} 项递增检查")
    return Limit(e, witness)


def succ_chain_sequence(step: int = 1, offset: int = 1) -> int:
    """φ(m) = Succ^{step·m + offset}(One) 的紧凑编码"""
    count = K(offset)
    for _ in range(step):
        count = add(count, I)
    wrap = loop(R, Pair(succ(Pair(K(0), L)), pred(R)))
    return encode(o(L, wrap, Pair(K(ONE_CODE), count)))
