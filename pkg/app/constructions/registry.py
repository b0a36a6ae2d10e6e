# -*- coding: utf-8 -*-
"""
构造目录

名称 → 构造器。清单中的验证条目和命令行的 construct 命令都经由这里取得
构造结果；参数从条目的 params 中读出，关系名与程序名按清单解析。

构造结果有五种形态，分别由 verify.run_item 处理：
  ReductionWitness   关系之间的归约，按样本验证
  MembershipCase     集合到关系的归约，与窗口内的真值比较
  MonotoneWitness    单调变换的见证 e′
  CounterexampleCase ⊆ 一侧的反例对
  E1CeCase           按列构造的枚举对上的 E₁^ce 检查
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

from app.constructions import basic, ceers, hyperarithmetic as hyp
from app.constructions.monotone import MonotoneWitness, monotone_catalog, monotone_finite_witness
from app.constructions.witness import ReductionWitness
from app.core.exception import ConstructionError, NotationError
from app.jump.iterate import iterate_jump_transfinite
from app.jump.notation import Notation, compact, from_kleene, notation_add
from app.kernel.enumeration import certified_set, set_at
from app.relations.manifest import Manifest
from app.relations.presentation import Ceer, RelationPresentation, make_id

logger = logging.getLogger(__name__)


class Params:
    """条目参数的类型化读取；缺失或类型不符时抛出 ConstructionError"""

    _MISSING = object()

    def __init__(self, construction: str, raw: Mapping[str, Any], manifest: Manifest):
        self.construction = construction
        self.raw = dict(raw)
        self.manifest = manifest

    def _get(self, key: str, default: Any) -> Any:
        if key in self.raw:
            return self.raw[key]
        if default is self._MISSING:
            raise ConstructionError(self.construction, f"missing parameter '{key}'")
        return default

    def has(self, key: str) -> bool:
        return key in self.raw

    def natural(self, key: str, default: Any = _MISSING) -> int:
        value = self._get(key, default)
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ConstructionError(self.construction, f"parameter '{key}' must be a natural number")
        return value

    def naturals(self, key: str, default: Any = _MISSING) -> Tuple[int, ...]:
        value = self._get(key, default)
        if not isinstance(value, (list, tuple)) or not all(isinstance(v, int) and v >= 0 for v in value):
            raise ConstructionError(self.construction, f"parameter '{key}' must be a list of naturals")
        return tuple(value)

    def program(self, key: str, default: Any = _MISSING) -> int:
        value = self._get(key, default)
        if isinstance(value, (int, str)) and not isinstance(value, bool):
            return self.manifest.program(value)
        raise ConstructionError(self.construction, f"parameter '{key}' must name a program")

    def relation(self, key: str, default: Any = _MISSING) -> RelationPresentation:
        value = self._get(key, default)
        if not isinstance(value, str):
            return value
        return self.manifest.relation(value)

    def ceer(self, key: str) -> Ceer:
        E = self.relation(key)
        if not isinstance(E, Ceer):
            raise ConstructionError(self.construction, f"parameter '{key}' must be a ceer")
        return E

    def notation(self, key: str) -> Notation:
        value = self._get(key, self._MISSING)
        if isinstance(value, str) and value in self.manifest.notations:
            return self.manifest.notations[value]
        if isinstance(value, int) and not isinstance(value, bool):
            try:
                return from_kleene(value)
            except NotationError as e:
                raise ConstructionError(self.construction, e.message) from e
        raise ConstructionError(self.construction, f"parameter '{key}' must name a notation")


@dataclass(frozen=True)
class MembershipCase:
    """集合 B 到关系的归约，连同窗口内计算的真值"""
    reduction: hyp.MembershipReduction
    truth: Callable[[int], bool] = field(compare=False)
    ns: Tuple[int, ...] = tuple(range(6))

    def describe(self) -> Dict[str, Any]:
        return {**self.reduction.describe(), "ns": list(self.ns)}


@dataclass(frozen=True)
class CounterexampleCase:
    """e ⊆ e0 成立，而窗口内没有 W 使 e 与 e0 ∩ W 等价"""
    e: int
    e0: int
    A: Tuple[int, ...]
    B: Tuple[int, ...]
    window: int

    def describe(self) -> Dict[str, Any]:
        return {"e": self.e, "e0": self.e0, "A": list(self.A), "B": list(self.B), "window": self.window}


@dataclass(frozen=True)
class E1CeCase:
    """E₁^ce ≤ (=^ce)⁺：源关系不可查询，改为按列构造的枚举对检查 g(e) 与 g(e′)"""
    witness: ReductionWitness
    checks: Tuple[Tuple[int, int, bool], ...]
    threshold: int = 3

    def describe(self) -> Dict[str, Any]:
        return {**self.witness.describe(), "threshold": self.threshold,
                "checks": [{"e": e, "e2": e2, "related": expected} for e, e2, expected in self.checks]}


Builder = Callable[[Params], Any]
Extra = Callable[[Params, Any, int], Dict[str, Any]]


@dataclass(frozen=True)
class Construction:
    name: str
    summary: str
    build: Builder
    extra: Optional[Extra] = None


_REGISTRY: Dict[str, Construction] = {}


def register(name: str, summary: str, extra: Optional[Extra] = None):
    """装饰器：把构造器登记到目录"""
    def decorator(build: Builder) -> Builder:
        _REGISTRY[name] = Construction(name, summary, build, extra)
        return build
    return decorator


def get_construction(name: str) -> Construction:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise ConstructionError(name, "unknown construction") from None


def construction_names() -> List[str]:
    return sorted(_REGISTRY)


def summaries() -> Dict[str, str]:
    return {name: _REGISTRY[name].summary for name in construction_names()}


def build(name: str, params: Mapping[str, Any], manifest: Manifest) -> Any:
    construction = get_construction(name)
    built = construction.build(Params(name, params, manifest))
    logger.info(f"[CONSTRUCT] 已构造 {name}")
    return built


def _id_into(p: Params) -> ReductionWitness:
    """id ≤ E：E 缺省时取 id 本身，E 为 ceer 时经辅助集合得到 id ≤ E⁺"""
    if not p.has("E"):
        return basic.identity_witness(make_id())
    return ceers.aux_set_A(p.ceer("E"))[1]


# ---------------------------------------------------------------- 跳跃的基本性质

@register("identity", "E ≤ E")
def _identity(p: Params) -> ReductionWitness:
    return basic.identity_witness(p.relation("E"))


@register("const_into_jump", "E ≤ E⁺ by constant enumerations")
def _const_into_jump(p: Params) -> ReductionWitness:
    return basic.const_into_jump(p.relation("E"))


@register("map_jump_const", "E⁺ ≤ E⁺⁺ by lifting const_into_jump")
def _map_jump_const(p: Params) -> ReductionWitness:
    return basic.map_jump(basic.const_into_jump(p.relation("E")))


@register("oplus_split", "(E ⊕ F)⁺ ≤ E⁺ × F⁺")
def _oplus_split(p: Params) -> ReductionWitness:
    return basic.oplus_split_witness(p.relation("E"), p.relation("F"))


@register("product_merge", "E⁺ × F⁺ ≤ (E ⊕ F)⁺")
def _product_merge(p: Params) -> ReductionWitness:
    return basic.product_merge_witness(p.relation("E"), p.relation("F"))


@register("idplus_up", "(=^ce)⁺ ≤ F₂^ce")
def _idplus_up(p: Params) -> ReductionWitness:
    return basic.idplus_up_witness()


@register("idplus_down", "F₂^ce ≤ (=^ce)⁺")
def _idplus_down(p: Params) -> ReductionWitness:
    return basic.idplus_down_witness()


@register("light_high", "h: id ≤ E gives =^ce ≤ E⁺")
def _light_high(p: Params) -> ReductionWitness:
    return basic.light_high_reduction(_id_into(p))


@register("closed_pair", "h: id ≤ E gives E × id ≤ E⁺⁺")
def _closed_pair(p: Params) -> ReductionWitness:
    return basic.closed_pair_reduction(_id_into(p))


@register("embedding", "id^{+a} ≤ id^{+(c + a)} on notations")
def _embedding(p: Params) -> ReductionWitness:
    c, a = p.notation("c"), p.notation("a")
    index = hyp.embedding_index(compact(c), compact(a))
    return ReductionWitness(index, iterate_jump_transfinite(make_id(), a),
                            iterate_jump_transfinite(make_id(), notation_add(c, a)), "embedding")


# ---------------------------------------------------------------- ceer 与 E_A

def _aux_columns(p: Params, witness: ReductionWitness, stage: int) -> Dict[str, Any]:
    E = p.ceer("E")
    count = p.natural("columns", 8)
    columns = {}
    for n in range(count):
        index = ceers.aux_column_index(E, n)
        exact = certified_set(index, stage)
        columns[str(n)] = sorted(exact if exact is not None else set_at(index, stage))
    return {"A_columns": columns}


@register("aux_set_A", "id ≤ E⁺ through the initial-interval columns of A", extra=_aux_columns)
def _aux_set_A(p: Params) -> ReductionWitness:
    return ceers.aux_set_A(p.ceer("E"))[1]


@register("upperbound", "E⁺ ≤ =^ce by E-closure of the enumerated set")
def _upperbound(p: Params) -> ReductionWitness:
    return ceers.upperbound_reduction(p.ceer("E"))


@register("invariant_to_jump", "=^ce ≤ E⁺ on E-invariant sets")
def _invariant_to_jump(p: Params) -> ReductionWitness:
    return ceers.invariant_to_jump(p.relation("E"))


@register("double_plus", "id ≤ E⁺⁺ through n-element sets")
def _double_plus(p: Params) -> ReductionWitness:
    return ceers.double_plus_reduction(p.relation("E") if p.has("E") else None)


@register("nonhhs_high", "=^ce ≤ (E_A)⁺ from a disjoint family avoiding A")
def _nonhhs_high(p: Params) -> ReductionWitness:
    return ceers.nonhhs_high_reduction(p.program("f_disjoint"), p.program("a"),
                                       p.natural("samples", 8), p.natural("check_stage", 2000))


@register("ea_shrink", "E_A ≤ E_B when A = B ∪ C with C decidable")
def _ea_shrink(p: Params) -> ReductionWitness:
    return ceers.ea_shrink_reduction(p.natural("b_elem"), p.program("c"), p.program("a"), p.program("b"))


@register("ea_shrink_jump", "(E_A)⁺ ≤ (E_B)⁺")
def _ea_shrink_jump(p: Params) -> ReductionWitness:
    return ceers.ea_shrink_jump(p.natural("b_elem"), p.program("c"), p.program("a"), p.program("b"))


@register("e1ce", "E₁^ce ≤ (=^ce)⁺")
def _e1ce(p: Params) -> E1CeCase:
    return E1CeCase(ceers.e1ce_reduction(), ceers.e1ce_sample_checks(), p.natural("threshold", 3))


# ---------------------------------------------------------------- 超算术集合

@register("pi04", "Π⁰₄ set ≤ (=^ce)⁺ with h(n) ⊆ e0")
def _pi04(p: Params) -> MembershipCase:
    i0 = p.program("i0")
    window = p.natural("window", 4)
    ns = p.naturals("ns", tuple(range(6)))
    return MembershipCase(hyp.pi04_reduction(i0), lambda n: hyp.pi04_truth(i0, n, window), ns)


def _borel_case(code: hyp.BorelCode, p: Params) -> MembershipCase:
    stage = p.natural("truth_stage", 10_000)
    ns = p.naturals("ns", tuple(range(6)))
    return MembershipCase(hyp.borel_code_reduction(code),
                          lambda n: hyp.window_membership(code, n, stage), ns)


@register("borel_leaf", "depth-0 Borel code: B = ran φ_f")
def _borel_leaf(p: Params) -> MembershipCase:
    return _borel_case(hyp.leaf_code(p.program("f")), p)


@register("borel_threshold", "depth-1 Borel code with leaves upper (q ≥ p) and lower (q < p)")
def _borel_threshold(p: Params) -> MembershipCase:
    window = (p.natural("P", 4), p.natural("Q", 4))
    leaves = hyp.threshold_leaves(p.program("upper"), p.program("lower"))
    return _borel_case(hyp.depth_one_code(leaves, window), p)


@register("borel_constant", "depth-1 Borel code with every leaf ran φ_f")
def _borel_constant(p: Params) -> MembershipCase:
    window = (p.natural("P", 4), p.natural("Q", 4))
    return _borel_case(hyp.depth_one_code(hyp.constant_leaves(p.program("f")), window), p)


@register("counterexample", "e ⊆ e0 without any W_i making e and e0 ∩ W_i equivalent")
def _counterexample(p: Params) -> CounterexampleCase:
    a, b = p.program("a"), p.program("b")
    e, e0 = hyp.counterexample_pair(a, b)
    A = certified_set(a, 10_000)
    B = certified_set(b, 10_000)
    if A is None or B is None:
        raise ConstructionError("counterexample", "A and B must be certified finite sets")
    return CounterexampleCase(e, e0, tuple(sorted(A)), tuple(sorted(B)), p.natural("window", 4))


@register("monotone", "finite e′ ⊆ e with x ∈ W_f(e′) for a monotone f")
def _monotone(p: Params) -> MonotoneWitness:
    catalog = monotone_catalog()
    f = p.raw.get("f", "identity")
    index = catalog[f] if isinstance(f, str) and f in catalog else p.program("f")
    return monotone_finite_witness(index, p.program("e"), p.natural("x"))
