# -*- coding: utf-8 -*-
"""
清单文件
JSON 文档，顶层字段：
  programs   名称 → 程序（编号、表达式文本或构造器对象）
  relations  名称 → 关系构造树
  notations  名称 → Kleene 编码
  suites     名称 → 验证条目列表
未知字段一律拒绝，错误带 JSON 路径。
"""

import json
import logging
import pathlib
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, Mapping, Optional, Tuple, Union

from app.core.exception import ManifestError, NotationError, ProgramSyntaxError, WorkbenchError
from app.jump.iterate import iterate_jump_finite, iterate_jump_transfinite
from app.jump.notation import Notation, from_kleene
from app.kernel.catalog import finite_set_index, list_index, table_index
from app.kernel.enumeration import View
from app.kernel.numbering import encode
from app.kernel.pairing import pair
from app.kernel.recursion import const_index
from app.kernel.sexpr import parse
from app.relations import presentation as rp
from app.relations.presentation import RelationPresentation

logger = logging.getLogger(__name__)

_TOP_LEVEL = {"programs", "relations", "notations", "suites", "description"}
_SUITE_ITEM = {"witness", "params", "samples", "stage", "fuel", "inject_fault", "pairs"}


@dataclass(frozen=True)
class SuiteItem:
    """一次验证：构造名、参数与抽样设置"""
    witness: str
    params: Tuple[Tuple[str, Any], ...] = ()
    samples: Optional[int] = None
    stage: Optional[int] = None
    fuel: Optional[int] = None
    inject_fault: bool = False
    pairs: Optional[Tuple[Tuple[int, int], ...]] = None

    @property
    def param_dict(self) -> Dict[str, Any]:
        return dict(self.params)


@dataclass
class Manifest:
    programs: Dict[str, int] = field(default_factory=dict)
    relations: Dict[str, RelationPresentation] = field(default_factory=dict)
    notations: Dict[str, Notation] = field(default_factory=dict)
    suites: Dict[str, Tuple[SuiteItem, ...]] = field(default_factory=dict)
    source: str = ""

    def program(self, ref: Union[int, str]) -> int:
        """名称、编号或表达式文本 → 程序编号"""
        if isinstance(ref, int):
            return ref
        if ref in self.programs:
            return self.programs[ref]
        if ref.isdigit():
            return int(ref)
        return encode(parse(ref))

    def relation(self, name: str) -> RelationPresentation:
        try:
            return self.relations[name]
        except KeyError:
            raise ManifestError(f"unknown relation '{name}'", f"$.relations.{name}") from None

    def suite(self, name: str) -> Tuple[SuiteItem, ...]:
        try:
            return self.suites[name]
        except KeyError:
            raise ManifestError(f"unknown suite '{name}'", f"$.suites.{name}") from None


def _expect(value: Any, kind: type, path: str) -> Any:
    if kind is int and (isinstance(value, bool) or not isinstance(value, int) or value < 0):
        raise ManifestError("expected a natural number", path)
    if not isinstance(value, kind):
        raise ManifestError(f"expected {kind.__name__}", path)
    return value


def _fields(obj: Mapping[str, Any], allowed: set, required: set, path: str) -> None:
    if not isinstance(obj, dict):
        raise ManifestError("expected object", path)
    unknown = set(obj) - allowed
    if unknown:
        raise ManifestError(f"unknown field(s): {', '.join(sorted(unknown))}", path)
    absent = required - set(obj)
    if absent:
        raise ManifestError(f"missing field(s): {', '.join(sorted(absent))}", path)


def _object(value: Any, path: str) -> Dict[str, Any]:
    if not isinstance(value, dict):
        raise ManifestError("expected object", path)
    return value


def _naturals(value: Any, path: str) -> Tuple[int, ...]:
    _expect(value, list, path)
    return tuple(_expect(v, int, f"{path}[{i}]") for i, v in enumerate(value))


# ---------------------------------------------------------------- programs

def _program_object(obj: Dict[str, Any], path: str) -> int:
    if len(obj) != 1:
        raise ManifestError("program object needs exactly one constructor", path)
    (kind, value), = obj.items()
    sub = f"{path}.{kind}"
    if kind == "const":
        return const_index(_expect(value, int, sub))
    if kind == "finite_set":
        return finite_set_index(_naturals(value, sub))
    if kind == "list":
        return list_index(_naturals(value, sub))
    if kind == "table":
        return table_index(_naturals(value, sub))
    if kind == "pairs":
        _expect(value, list, sub)
        edges = []
        for i, item in enumerate(value):
            edge = _naturals(item, f"{sub}[{i}]")
            if len(edge) != 2:
                raise ManifestError("expected [a, b]", f"{sub}[{i}]")
            edges.append(pair(*edge))
        return list_index(edges)
    raise ManifestError(f"unknown program constructor '{kind}'", path)


def _program(value: Any, programs: Dict[str, int], path: str) -> int:
    if isinstance(value, bool):
        raise ManifestError("expected program", path)
    if isinstance(value, int):
        return _expect(value, int, path)
    if isinstance(value, dict):
        return _program_object(value, path)
    if isinstance(value, str):
        if value in programs:
            return programs[value]
        try:
            return encode(parse(value))
        except ProgramSyntaxError as e:
            raise ManifestError(f"bad program text: {e.message}", path) from e
    raise ManifestError("expected program", path)


# ---------------------------------------------------------------- relations

def _view(obj: Dict[str, Any], path: str) -> View:
    try:
        return View(obj.get("view", "range"))
    except ValueError:
        raise ManifestError("view must be 'domain' or 'range'", f"{path}.view") from None


class _RelationReader:
    def __init__(self, raw: Dict[str, Any], programs: Dict[str, int], notations: Dict[str, Notation]):
        self.raw = raw
        self.programs = programs
        self.notations = notations
        self.done: Dict[str, RelationPresentation] = {}
        self.pending: set = set()

    def named(self, name: str, path: str) -> RelationPresentation:
        if name in self.done:
            return self.done[name]
        if name not in self.raw:
            raise ManifestError(f"unknown relation '{name}'", path)
        if name in self.pending:
            raise ManifestError(f"relation '{name}' refers to itself", path)
        self.pending.add(name)
        self.done[name] = self.read(self.raw[name], f"$.relations.{name}")
        self.pending.discard(name)
        return self.done[name]

    def read(self, node: Any, path: str) -> RelationPresentation:
        if isinstance(node, str):
            return self.named(node, path)
        if not isinstance(node, dict) or "kind" not in node:
            raise ManifestError("expected relation name or object with 'kind'", path)
        kind = node["kind"]
        builder = _RELATION_KINDS.get(kind)
        if builder is None:
            raise ManifestError(f"unknown relation kind '{kind}'", f"{path}.kind")
        allowed, required, build = builder
        _fields(node, allowed | {"kind"}, required, path)
        try:
            return build(self, node, path)
        except ManifestError:
            raise
        except (WorkbenchError, ValueError) as e:
            raise ManifestError(str(e), path) from e

    def program(self, node: Dict[str, Any], key: str, path: str) -> int:
        return _program(node[key], self.programs, f"{path}.{key}")

    def notation(self, value: Any, path: str) -> Notation:
        if isinstance(value, str):
            if value not in self.notations:
                raise ManifestError(f"unknown notation '{value}'", path)
            return self.notations[value]
        try:
            return from_kleene(_expect(value, int, path))
        except NotationError as e:
            raise ManifestError(e.message, path) from e


def _finite(reader: _RelationReader, node: Dict[str, Any], path: str) -> RelationPresentation:
    from app.finite_oracle.partition import FinitePartition, embed_finite
    return embed_finite(FinitePartition.of(_naturals(node["blocks"], f"{path}.blocks")))


_Builder = Callable[[_RelationReader, Dict[str, Any], str], RelationPresentation]

_RELATION_KINDS: Dict[str, Tuple[set, set, _Builder]] = {
    "id": (set(), set(), lambda r, n, p: rp.make_id()),
    "delta": ({"k"}, {"k"}, lambda r, n, p: rp.make_delta(_expect(n["k"], int, f"{p}.k"))),
    "ea": ({"a"}, {"a"}, lambda r, n, p: rp.make_EA(r.program(n, "a", p))),
    "ceer": ({"pairs"}, {"pairs"}, lambda r, n, p: rp.make_ceer(r.program(n, "pairs", p))),
    "decidable": ({"decider", "certificate"}, {"decider"},
                  lambda r, n, p: rp.make_decidable(r.program(n, "decider", p), str(n.get("certificate", "")))),
    "oplus": ({"left", "right"}, {"left", "right"},
              lambda r, n, p: rp.make_oplus(r.read(n["left"], f"{p}.left"), r.read(n["right"], f"{p}.right"))),
    "times": ({"left", "right"}, {"left", "right"},
              lambda r, n, p: rp.make_times(r.read(n["left"], f"{p}.left"), r.read(n["right"], f"{p}.right"))),
    "ce_equality": ({"view"}, set(), lambda r, n, p: rp.make_ce_equality(_view(n, p))),
    "e1_ce": (set(), set(), lambda r, n, p: rp.make_e1_ce()),
    "F": ({"n", "view"}, {"n"}, lambda r, n, p: rp.make_Fn(_expect(n["n"], int, f"{p}.n"), _view(n, p))),
    "jump": ({"of"}, {"of"}, lambda r, n, p: rp.JumpOf(r.read(n["of"], f"{p}.of"))),
    "iterate": ({"of", "n"}, {"of", "n"},
                lambda r, n, p: iterate_jump_finite(r.read(n["of"], f"{p}.of"), _expect(n["n"], int, f"{p}.n"))),
    "transfinite": ({"of", "notation"}, {"of", "notation"},
                    lambda r, n, p: iterate_jump_transfinite(r.read(n["of"], f"{p}.of"),
                                                             r.notation(n["notation"], f"{p}.notation"))),
    "finite": ({"blocks"}, {"blocks"}, _finite),
}


# ---------------------------------------------------------------- suites

def parse_suite_item(obj: Any, path: str) -> SuiteItem:
    _fields(obj, _SUITE_ITEM, {"witness"}, path)
    params = obj.get("params", {})
    if not isinstance(params, dict):
        raise ManifestError("expected object", f"{path}.params")
    pairs = None
    if "pairs" in obj:
        _expect(obj["pairs"], list, f"{path}.pairs")
        pairs = tuple(tuple(_naturals(p, f"{path}.pairs[{i}]")) for i, p in enumerate(obj["pairs"]))
        if any(len(p) != 2 for p in pairs):
            raise ManifestError("pairs must have two elements", f"{path}.pairs")
    return SuiteItem(
        witness=_expect(obj["witness"], str, f"{path}.witness"),
        params=tuple(sorted(params.items())),
        samples=_expect(obj["samples"], int, f"{path}.samples") if "samples" in obj else None,
        stage=_expect(obj["stage"], int, f"{path}.stage") if "stage" in obj else None,
        fuel=_expect(obj["fuel"], int, f"{path}.fuel") if "fuel" in obj else None,
        inject_fault=bool(_expect(obj.get("inject_fault", False), bool, f"{path}.inject_fault")),
        pairs=pairs,
    )


def parse_manifest(document: Any, source: str = "") -> Manifest:
    """校验并构建清单"""
    _fields(document, _TOP_LEVEL, set(), "$")
    manifest = Manifest(source=source)

    raw_programs = document.get("programs", {})
    _object(raw_programs, "$.programs")
    for name, value in raw_programs.items():
        manifest.programs[name] = _program(value, manifest.programs, f"$.programs.{name}")

    raw_notations = document.get("notations", {})
    _object(raw_notations, "$.notations")
    for name, value in raw_notations.items():
        try:
            manifest.notations[name] = from_kleene(_expect(value, int, f"$.notations.{name}"))
        except NotationError as e:
            raise ManifestError(e.message, f"$.notations.{name}") from e

    raw_relations = document.get("relations", {})
    _object(raw_relations, "$.relations")
    reader = _RelationReader(raw_relations, manifest.programs, manifest.notations)
    for name in raw_relations:
        manifest.relations[name] = reader.named(name, f"$.relations.{name}")

    raw_suites = document.get("suites", {})
    _object(raw_suites, "$.suites")
    for name, items in raw_suites.items():
        _expect(items, list, f"$.suites.{name}")
        manifest.suites[name] = tuple(parse_suite_item(item, f"$.suites.{name}[{i}]") for i, item in enumerate(items))

    logger.info(f"[MANIFEST] {source or '<inline>'}: {len(manifest.programs)} 个程序, "
                f"{len(manifest.relations)} 个关系, {len(manifest.suites)} 个验证套件")
    return manifest


def load_manifest(path: Union[str, pathlib.Path]) -> Manifest:
    path = pathlib.Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
    except FileNotFoundError:
        raise ManifestError(f"manifest not found: {path}") from None
    except json.JSONDecodeError as e:
        raise ManifestError(f"invalid JSON: {e.msg} (line {e.lineno})") from e
    return parse_manifest(document, str(path))


@lru_cache(maxsize=8)
def cached_manifest(path: str) -> Manifest:
    """同一进程内按路径复用已校验的清单"""
    return load_manifest(path)
