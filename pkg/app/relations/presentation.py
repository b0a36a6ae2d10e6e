# -*- coding: utf-8 -*-
"""
等价关系的表示

每个表示都是不可变、可哈希的值；所有载体都经由 Cantor 配对编码到 ℕ：
  Sum      ⟨m, tag⟩，tag = 0 为左侧，tag ≥ 1 归一为右侧
  Product  ⟨m, n⟩
  列编码   A_(k) = {p : ⟨k, p⟩ ∈ A}
集合型关系（CeRestriction / ColumnRelation）默认把编号 e 读作 ran φ_e
（"一个枚举的编号"）；view=DOMAIN 时读作 W_e = dom φ_e。
"""

from dataclasses import dataclass
from enum import Enum
from typing import ClassVar, FrozenSet, Union

from app.core.exception import FiniteOracleError
from app.kernel.catalog import K, L, R, ifz, ne
from app.kernel.enumeration import View
from app.kernel.numbering import encode
from app.kernel.pairing import pair
from app.relations.verdict import Answer

_BOTH = frozenset({Answer.RELATED, Answer.UNRELATED})
_RELATED_ONLY = frozenset({Answer.RELATED})


class SetRelation(str, Enum):
    """CeRestriction 的底层集合关系"""
    EQUALITY = "equality"
    ALMOST_EQUAL_COLUMNS = "almost_equal_columns"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Decidable:
    """判定程序在 ⟨m,n⟩ 上输出非 0 表示相关；总性由 certificate 说明"""
    decider: int
    certificate: str = ""
    final_sides: ClassVar[FrozenSet[Answer]] = _BOTH


@dataclass(frozen=True)
class Ceer:
    """ran φ_c 中的每个 ⟨a,b⟩ 是一条边，关系为其生成的等价闭包"""
    pair_enumerator: int
    final_sides: ClassVar[FrozenSet[Answer]] = _RELATED_ONLY


@dataclass(frozen=True)
class EA:
    """m E_A n ⟺ m = n 或 m, n ∈ A，A = ran φ_a"""
    a_enumerator: int
    final_sides: ClassVar[FrozenSet[Answer]] = _RELATED_ONLY


@dataclass(frozen=True)
class FiniteId:
    """Δ(k)：≥ k 的元素归入 k-1"""
    k: int
    final_sides: ClassVar[FrozenSet[Answer]] = _BOTH

    def __post_init__(self):
        if self.k < 1:
            raise FiniteOracleError(f"Delta(k) needs k >= 1, got {self.k}", k=self.k)


@dataclass(frozen=True)
class Sum:
    left: "RelationPresentation"
    right: "RelationPresentation"
    final_sides: ClassVar[FrozenSet[Answer]] = _BOTH


@dataclass(frozen=True)
class Product:
    left: "RelationPresentation"
    right: "RelationPresentation"
    final_sides: ClassVar[FrozenSet[Answer]] = _BOTH


@dataclass(frozen=True)
class CeRestriction:
    """e E^ce e′ ⟺ 集合(e) base 集合(e′)"""
    base: SetRelation = SetRelation.EQUALITY
    view: View = View.RANGE
    final_sides: ClassVar[FrozenSet[Answer]] = _BOTH


@dataclass(frozen=True)
class ColumnRelation:
    """F_n 的 ce 限制：F_1 为集合相等，F_{n+1} 比较列族的 F_n 类"""
    n: int
    view: View = View.RANGE
    final_sides: ClassVar[FrozenSet[Answer]] = _BOTH

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"column relation level must be >= 1, got {self.n}")


@dataclass(frozen=True)
class JumpOf:
    """E⁺：载体是枚举的编号"""
    inner: "RelationPresentation"
    final_sides: ClassVar[FrozenSet[Answer]] = _BOTH


@dataclass(frozen=True)
class LimitIterate:
    """E^{+3·5^e}：⟨m,x⟩ 与 ⟨n,y⟩ 相关当且仅当 m = n 且 x E^{+φ_e(m)} y"""
    base: "RelationPresentation"
    sequence: int
    final_sides: ClassVar[FrozenSet[Answer]] = _BOTH


RelationPresentation = Union[
    Decidable, Ceer, EA, FiniteId, Sum, Product, CeRestriction,
    ColumnRelation, JumpOf, LimitIterate,
]


def sum_code(m: int, right_side: bool) -> int:
    return pair(m, 1 if right_side else 0)


def _identity_decider() -> int:
    return encode(ifz(ne(L, R), K(1), K(0)))


def make_id() -> Decidable:
    return Decidable(_identity_decider(), "identity test halts in a fixed number of steps")


def make_delta(k: int) -> FiniteId:
    return FiniteId(k)


def make_EA(a: int) -> EA:
    return EA(a)


def make_ceer(c: int) -> Ceer:
    return Ceer(c)


def make_decidable(decider: int, certificate: str = "") -> Decidable:
    return Decidable(decider, certificate)


def make_oplus(left: RelationPresentation, right: RelationPresentation) -> Sum:
    return Sum(left, right)


def make_times(left: RelationPresentation, right: RelationPresentation) -> Product:
    return Product(left, right)


def make_ce_equality(view: View = View.RANGE) -> CeRestriction:
    return CeRestriction(SetRelation.EQUALITY, View(view))


def make_e1_ce() -> CeRestriction:
    """E₁ 的 ce 限制（只作为构造的源关系出现，不支持查询）"""
    return CeRestriction(SetRelation.ALMOST_EQUAL_COLUMNS, View.DOMAIN)


def make_Fn(n: int, view: View = View.RANGE) -> ColumnRelation:
    return ColumnRelation(n, View(view))


def describe(presentation: RelationPresentation) -> str:
    """简短的人类可读描述"""
    if isinstance(presentation, Decidable):
        return f"decidable[{presentation.decider}]"
    if isinstance(presentation, Ceer):
        return f"ceer[{presentation.pair_enumerator}]"
    if isinstance(presentation, EA):
        return f"E_A[{presentation.a_enumerator}]"
    if isinstance(presentation, FiniteId):
        return f"Delta({presentation.k})"
    if isinstance(presentation, Sum):
        return f"({describe(presentation.left)} + {describe(presentation.right)})"
    if isinstance(presentation, Product):
        return f"({describe(presentation.left)} x {describe(presentation.right)})"
    if isinstance(presentation, CeRestriction):
        return f"{presentation.base}^ce[{presentation.view}]"
    if isinstance(presentation, ColumnRelation):
        return f"F_{presentation.n}^ce[{presentation.view}]"
    if isinstance(presentation, JumpOf):
        return f"{describe(presentation.inner)}+"
    if isinstance(presentation, LimitIterate):
        return f"{describe(presentation.base)}^(+lim {presentation.sequence})"
    raise TypeError(f"not a relation presentation: {presentation!r}")
