# -*- coding: utf-8 -*-
"""
归约见证的抽样验证

对每个样本 (m, n) 比较 source 上的判定与 target 上 (f(m), f(n)) 的判定：
两侧都是 final 且相反即为反驳；两侧都是 final 且一致为确认；
源为 final 而目标只是同向的 provisional 记为趋势一致；其余计为 unknown。
"""

import logging
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from app.constructions import registry
from app.constructions.ceers import e1ce_column_check
from app.constructions.hyperarithmetic import (
    MembershipReduction, counterexample_hint, counterexample_intersections, counterexample_machine_scan,
)
from app.constructions.monotone import MonotoneWitness
from app.constructions.registry import CounterexampleCase, E1CeCase, MembershipCase
from app.constructions.witness import Report, ReductionWitness, swapped_outputs
from app.core.bus.event_bus import EventBus, get_event_bus
from app.core.bus.events import EventType
from app.core.bus.event_models import (
    RefutationEvent, SuiteCompletedEvent, VerifyCompletedEvent, VerifyStartedEvent,
)
from app.core.exception import ConstructionError, UnsupportedPresentationError
from app.core.util.logger import timed_operation
from app.core.util.mp_manager import get_multiprocess_manager
from app.jump.subset import subset_certified
from app.kernel.enumeration import View
from app.kernel.pairing import unpair
from app.relations.manifest import Manifest, SuiteItem
from app.relations.presentation import CeRestriction, SetRelation
from app.relations.query import query
from app.relations.verdict import Answer, Certainty, Verdict

logger = logging.getLogger(__name__)

CONFIRMED, TREND, UNKNOWN, REFUTED = "confirmed", "trend", "unknown", "refuted"


def sample_pairs(samples: int) -> List[Tuple[int, int]]:
    """Cantor 次序下的前 samples 个 (m, n)"""
    return [unpair(k) for k in range(samples)]


def _classify(source: Verdict, target: Verdict) -> str:
    if not source.is_final or source.answer is Answer.UNKNOWN or target.answer is Answer.UNKNOWN:
        return UNKNOWN
    if target.answer is not source.answer:
        return REFUTED if target.is_final else UNKNOWN
    return CONFIRMED if target.is_final else TREND


def check_pair(w: ReductionWitness, m: int, n: int, stage: int, fuel: int) -> Dict[str, Any]:
    """单个样本的比较结果；可在工作进程中运行"""
    row: Dict[str, Any] = {"m": m, "n": n}
    try:
        source = query(w.source, m, n, stage)
        fm, fn = w.image(m, fuel), w.image(n, fuel)
        if fm is None or fn is None:
            row.update(outcome=UNKNOWN, source=source.to_dict(), detail="image out of fuel")
            return row
        target = query(w.target, fm, fn, stage)
    except UnsupportedPresentationError as e:
        row.update(outcome=UNKNOWN, detail=e.message)
        return row
    row.update(outcome=_classify(source, target), source=source.to_dict(), target=target.to_dict(),
               images=[fm, fn])
    return row


def verify(w: ReductionWitness, samples: int = 64, stage: int = 10_000, fuel: Optional[int] = None,
           pairs: Optional[Sequence[Tuple[int, int]]] = None, bus: Optional[EventBus] = None) -> Report:
    """按样本检查 w 是否与两侧的最终判定相容；反驳即失败"""
    bus = bus or get_event_bus()
    fuel = fuel if fuel is not None else stage
    chosen = list(pairs) if pairs is not None else sample_pairs(samples)
    name = w.provenance
    bus.publish(EventType.VERIFY_STARTED, VerifyStartedEvent(name, len(chosen), stage))

    @timed_operation(logger, f"verify {name}")
    def run() -> List[Dict[str, Any]]:
        manager = get_multiprocess_manager()
        return manager.map(check_pair, [(w, m, n, stage, fuel) for m, n in chosen])

    rows = sorted(run(), key=lambda row: (row["m"], row["n"]))
    report = Report(name, len(chosen), stage, notes=w.notes)
    for row in rows:
        outcome = row["outcome"]
        if outcome == CONFIRMED:
            report.confirmations += 1
        elif outcome == TREND:
            report.trend_agreements += 1
        elif outcome == REFUTED:
            report.refutations.append(row)
            bus.publish(EventType.VERIFY_REFUTATION, RefutationEvent(name, row))
            logger.error(f"[VERIFY] {name}: 样本 ({row['m']}, {row['n']}) 被反驳")
        else:
            report.unknowns += 1
    bus.publish(EventType.VERIFY_COMPLETED,
                VerifyCompletedEvent(name, report.passed, report.confirmations, report.unknowns))
    logger.info(f"[VERIFY] {name}: 确认 {report.confirmations}，趋势 {report.trend_agreements}，"
                f"未知 {report.unknowns}，反驳 {len(report.refutations)}")
    return report


def verify_membership(reduction: MembershipReduction, truth: Callable[[int], bool],
                      ns: Iterable[int], stages: Sequence[int],
                      bus: Optional[EventBus] = None) -> Report:
    """n ∈ B ⟺ h(n) relation e 的抽样检查，同时检查 h(n) ⊆ e

    final 判定与真值相反、或 ⊆ 被 final 否定，都算反驳。
    """
    bus = bus or get_event_bus()
    ns = list(ns)
    name = reduction.name
    bus.publish(EventType.VERIFY_STARTED, VerifyStartedEvent(name, len(ns), max(stages)))
    report = Report(name, len(ns), max(stages))
    side = {"related": 0, "unknown": 0, "unrelated": 0}
    for n in ns:
        expected = Answer.RELATED if truth(n) else Answer.UNRELATED
        for stage in stages:
            verdict = reduction.verdict(n, stage)
            subset = reduction.side_condition(n, stage)
            side[str(subset.answer)] += 1
            row = {"n": n, "stage": stage, "truth": truth(n),
                   "verdict": verdict.to_dict(), "side_condition": subset.to_dict()}
            if (verdict.is_final and verdict.answer not in (expected, Answer.UNKNOWN)) or \
                    (subset.is_final and subset.unrelated):
                report.refutations.append(row)
                bus.publish(EventType.VERIFY_REFUTATION, RefutationEvent(name, row))
            elif verdict.answer is expected:
                if verdict.is_final:
                    report.confirmations += 1
                else:
                    report.trend_agreements += 1
            else:
                report.unknowns += 1
    report.extra["side_condition"] = side
    bus.publish(EventType.VERIFY_COMPLETED,
                VerifyCompletedEvent(name, report.passed, report.confirmations, report.unknowns))
    logger.info(f"[VERIFY] {name}: {report.to_dict()}")
    return report


# ---------------------------------------------------------------- 清单中的验证套件

def _stages(stage: int) -> List[int]:
    return sorted({max(1, stage // 100), max(1, stage // 10), stage})


def _run_witness(built: ReductionWitness, item: SuiteItem, stage: int, fuel: int, samples: int,
                 bus: EventBus) -> Report:
    if item.inject_fault:
        built = swapped_outputs(built)
    return verify(built, samples, stage, fuel, item.pairs, bus)


def _run_membership(built: MembershipCase, item: SuiteItem, stage: int, fuel: int, samples: int,
                    bus: EventBus) -> Report:
    return verify_membership(built.reduction, built.truth, built.ns, _stages(stage), bus)


def _run_monotone(built: MonotoneWitness, item: SuiteItem, stage: int, fuel: int, samples: int,
                  bus: EventBus) -> Report:
    check = built.check(stage, fuel)
    report = Report(f"monotone(f={built.f}, e={built.e}, x={built.x})", 1, stage, extra={"check": check})
    for key in ("subset", "contains_x", "finite"):
        if check[key]:
            report.confirmations += 1
        else:
            report.refutations.append({"condition": key, **check})
    return report


def _run_counterexample(built: CounterexampleCase, item: SuiteItem, stage: int, fuel: int, samples: int,
                        bus: EventBus) -> Report:
    sets = CeRestriction(SetRelation.EQUALITY, View.RANGE)
    stages = _stages(stage)
    report = Report("counterexample", len(stages), stage)
    for verdict in subset_certified(built.e, built.e0, sets, stages, partner_hint=counterexample_hint):
        if verdict.unrelated and verdict.is_final:
            report.refutations.append(verdict.to_dict())
        elif verdict.related and verdict.is_final:
            report.confirmations += 1
        elif verdict.related:
            report.trend_agreements += 1
        else:
            report.unknowns += 1
    found = counterexample_intersections(built.A, built.B, built.window)
    report.extra["intersections"] = [sorted(w) for w in found]
    scan = counterexample_machine_scan(built.e, built.e0, built.A, built.B, built.window, stage)
    for row in scan:
        # 机器结论为最终且与主机预测相反时才算反驳
        if not row["agrees"] and row["certainty"] == str(Certainty.FINAL):
            report.refutations.append({"W": row["W"], "predicted": row["predicted"], "answer": row["answer"]})
    report.extra["machine_scan"] = scan
    return report


def _run_e1ce(built: E1CeCase, item: SuiteItem, stage: int, fuel: int, samples: int,
              bus: EventBus) -> Report:
    name = built.witness.provenance
    report = Report(name, len(built.checks), stage, notes=built.witness.notes)
    rows = []
    for e, e2, expected in built.checks:
        verdict = e1ce_column_check(e, e2, stage, built.threshold)
        row = {"e": e, "e2": e2, "expected": str(Answer.RELATED if expected else Answer.UNRELATED),
               "verdict": verdict.to_dict()}
        rows.append(row)
        agrees = verdict.related if expected else verdict.unrelated
        if verdict.is_final and verdict.answer is not Answer.UNKNOWN and not agrees:
            report.refutations.append(row)
            bus.publish(EventType.VERIFY_REFUTATION, RefutationEvent(name, row))
        elif agrees:
            if verdict.is_final:
                report.confirmations += 1
            else:
                report.trend_agreements += 1
        else:
            report.unknowns += 1
    report.extra["column_checks"] = rows
    return report


_RUNNERS = {
    ReductionWitness: _run_witness,
    MembershipCase: _run_membership,
    MonotoneWitness: _run_monotone,
    CounterexampleCase: _run_counterexample,
    E1CeCase: _run_e1ce,
}


def run_item(item: SuiteItem, manifest: Manifest, stage: int, fuel: int, samples: int,
             bus: Optional[EventBus] = None) -> Report:
    """构造条目并按其形态验证；条目自带的 stage / fuel / samples 优先"""
    bus = bus or get_event_bus()
    stage = item.stage if item.stage is not None else stage
    fuel = item.fuel if item.fuel is not None else fuel
    samples = item.samples if item.samples is not None else samples
    built = registry.build(item.witness, item.param_dict, manifest)
    runner = _RUNNERS.get(type(built))
    if runner is None:
        raise ConstructionError(item.witness, f"no verifier for {type(built).__name__}")
    report = runner(built, item, stage, fuel, samples, bus)
    construction = registry.get_construction(item.witness)
    if construction.extra is not None:
        report.extra.update(construction.extra(registry.Params(item.witness, item.param_dict, manifest),
                                                built, stage))
    return report


def run_suite(manifest: Manifest, name: str, stage: int, fuel: int, samples: int,
              bus: Optional[EventBus] = None) -> List[Report]:
    """依次运行套件中的条目；报告次序与条目次序一致"""
    bus = bus or get_event_bus()
    items = manifest.suite(name)

    @timed_operation(logger, f"suite {name}")
    def run() -> List[Report]:
        return [run_item(item, manifest, stage, fuel, samples, bus) for item in items]

    reports = run()
    failures = sum(1 for r in reports if not r.passed)
    bus.publish(EventType.SUITE_COMPLETED, SuiteCompletedEvent(name, len(reports), failures))
    return reports
