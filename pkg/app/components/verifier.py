# -*- coding: utf-8 -*-
"""
验证组件
运行清单中的验证套件或单个条目，并记录验证事件
"""

from typing import Any, Dict, List

from app.components.common import WorkbenchCell
from app.constructions.verify import run_item, run_suite
from app.core.bus import event
from app.core.bus.event_models import (
    RefutationEvent, SuiteCompletedEvent, VerifyCompletedEvent, VerifyStartedEvent,
)
from app.core.bus.events import EventType
from app.relations.manifest import parse_suite_item


class Verifier(WorkbenchCell):
    """验证组件"""

    def __init__(self):
        # 只保留最近一次 suite / item 命令中的反驳
        self.refutations: List[Dict[str, Any]] = []

    @event(EventType.VERIFY_STARTED)
    def on_verify_started(self, evt: VerifyStartedEvent):
        self.logger.info(f"[VERIFY] 开始 {evt.witness}: {evt.get('samples')} 个样本，阶段 {evt.get('stage')}")

    @event(EventType.VERIFY_REFUTATION)
    def on_refutation(self, evt: RefutationEvent):
        self.refutations.append({"witness": evt.witness, **evt.refutation})
        self.logger.warning(f"[VERIFY] 反驳 {evt.witness}: {evt.refutation}")

    @event(EventType.VERIFY_COMPLETED)
    def on_verify_completed(self, evt: VerifyCompletedEvent):
        status = "通过" if evt.passed else "失败"
        self.logger.info(f"[VERIFY] 结束 {evt.get('witness')}: {status}")

    @event(EventType.SUITE_COMPLETED)
    def on_suite_completed(self, evt: SuiteCompletedEvent):
        self.logger.info(f"[SUITE] {evt.get('suite')}: {evt.get('items')} 项，{evt.failures} 项失败")

    def _limits(self, args: Dict[str, Any]) -> Dict[str, int]:
        return {
            "stage": self.natural(args, "stage", self.settings.stage),
            "fuel": self.natural(args, "fuel", self.settings.fuel),
            "samples": self.natural(args, "samples", self.settings.samples),
        }

    def _cmd_suite(self, args: Any = None) -> Dict[str, Any]:
        """运行一个验证套件：{"suite", "stage", "fuel", "samples"}"""
        args = self.args_of(args)
        self.refutations.clear()
        name = self.text(args, "suite")
        reports = run_suite(self.manifest(args), name, bus=self.event_bus, **self._limits(args))
        return {
            "suite": name,
            "passed": all(r.passed for r in reports),
            "reports": [r.to_dict() for r in reports],
        }

    def _cmd_item(self, args: Any = None) -> Dict[str, Any]:
        """运行单个条目：{"witness", "params", "samples", "stage", "fuel", "inject_fault", "pairs"}"""
        args = self.args_of(args)
        self.refutations.clear()
        limits = self._limits(args)
        raw = {k: v for k, v in args.items() if k not in ("manifest", "stage", "fuel", "samples")}
        item = parse_suite_item(raw, "$")
        report = run_item(item, self.manifest(args), bus=self.event_bus, **limits)
        return report.to_dict()

    def _cmd_suites(self, args: Any = None) -> Dict[str, List[str]]:
        """清单中的套件及其条目"""
        manifest = self.manifest(self.args_of(args))
        return {name: [item.witness for item in items] for name, items in sorted(manifest.suites.items())}
