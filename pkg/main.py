# -*- coding: utf-8 -*-
"""
应用程序主入口

    main.py [--manifest PATH] [--fuel N] [--stage N] [--json] [--verbose] COMMAND ...

每个命令都被翻译成 '组件名:命令:参数' 交给命令分发器执行。
退出码：0 正常，1 用法或工作台错误，2 eval 燃料耗尽，3 验证出现反驳。
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from app.core.di.container import setup_di_container
from app.core.exception import WorkbenchError
from app.core.handler.message_handler import CommandDispatcher
from app.core.util.components_loader import load_components, load_settings
from app.core.util.logger import setup_logger

logger = logging.getLogger("app.cli")

EXIT_OK, EXIT_USAGE, EXIT_OUT_OF_FUEL, EXIT_REFUTED = 0, 1, 2, 3

DEFAULT_CELLS = [
    "app.components.machine.Machine",
    "app.components.relations.Relations",
    "app.components.constructions.Constructions",
    "app.components.verifier.Verifier",
]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got '{text}'") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="workbench", description="computable reducibility workbench")
    parser.add_argument("--manifest", help="manifest JSON (defaults to the bundled one)")
    parser.add_argument("--fuel", type=_natural, help="fuel per evaluation")
    parser.add_argument("--stage", type=_natural, help="stage for staged queries")
    parser.add_argument("--json", action="store_true", help="print results as JSON")
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level on stderr")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = commands.add_parser("eval", help="run a program on an input")
    p.add_argument("program")
    p.add_argument("input", type=int)

    p = commands.add_parser("enumerate", help="staged enumeration of W_e (or the range)")
    p.add_argument("program")
    p.add_argument("--range", action="store_true", help="enumerate ran φ_e instead of W_e")

    p = commands.add_parser("query", help="staged verdict for m E n")
    p.add_argument("relation")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = commands.add_parser("construct", help="build a named construction")
    p.add_argument("name")
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")

    p = commands.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="paper-props")
    p.add_argument("--samples", type=_natural)

    commands.add_parser("report", help="list relations, constructions and suites")
    return parser


def _param(text: str) -> tuple:
    key, sep, raw = text.partition("=")
    if not sep or not key:
        raise WorkbenchError(f"--param expects KEY=VALUE, got '{text}'")
    try:
        return key, json.loads(raw)
    except json.JSONDecodeError:
        return key, raw


def _call(dispatcher: CommandDispatcher, command: str, payload: Dict[str, Any]) -> Any:
    return dispatcher.dispatch(f"{command}:{json.dumps(payload, sort_keys=True)}")


def run_command(args: argparse.Namespace, dispatcher: CommandDispatcher) -> tuple:
    """执行命令，返回 (结果, 退出码)"""
    common: Dict[str, Any] = {}
    if args.manifest:
        common["manifest"] = args.manifest
    if args.command == "eval":
        result = _call(dispatcher, "machine:eval", {**common, "program": args.program, "input": args.input})
        return result, EXIT_OK if result["status"] == "halted" else EXIT_OUT_OF_FUEL
    if args.command == "enumerate":
        return _call(dispatcher, "machine:enumerate",
                     {**common, "program": args.program, "range": args.range}), EXIT_OK
    if args.command == "query":
        return _call(dispatcher, "relations:query",
                     {**common, "relation": args.relation, "m": args.m, "n": args.n}), EXIT_OK
    if args.command == "construct":
        params = dict(_param(p) for p in args.param)
        return _call(dispatcher, "constructions:build", {**common, "name": args.name, "params": params}), EXIT_OK
    if args.command == "verify":
        payload = {**common, "suite": args.suite}
        if args.samples is not None:
            payload["samples"] = args.samples
        result = _call(dispatcher, "verifier:suite", payload)
        return result, EXIT_OK if result["passed"] else EXIT_REFUTED
    result = {
        "relations": _call(dispatcher, "relations:list", common),
        "constructions": _call(dispatcher, "constructions:list", common),
        "suites": _call(dispatcher, "verifier:suites", common),
    }
    return result, EXIT_OK


def render(command: str, result: Any) -> List[str]:
    """人类可读的输出"""
    if command == "eval":
        if result["status"] == "halted":
            return [f"Halted {result['value']} (steps {result['steps']})"]
        return [f"OutOfFuel (fuel {result['fuel']})"]
    if command == "query":
        return [f"{result['answer']} {result['certainty']} @ stage {result['stage']}"]
    if command == "enumerate":
        lines = [f"{d['element']}\tstage {d['stage']}\tinput {d['input']}" for d in result["elements"]]
        if result["certified"] is not None:
            lines.append(f"certified: {result['certified']}")
        return lines
    if command == "verify":
        lines = []
        for report in result["reports"]:
            status = "PASS" if not report["refutations"] else "FAIL"
            lines.append(f"{status} {report['witness']}: confirmations={report['confirmations']} "
                         f"trend={report['trend_agreements']} unknowns={report['unknowns']} "
                         f"refutations={len(report['refutations'])}")
            for refutation in report["refutations"]:
                lines.append(f"    refuted: {json.dumps(refutation, sort_keys=True)}")
            for key, value in sorted(report.get("extra", {}).items()):
                lines.append(f"    {key}: {json.dumps(value, sort_keys=True, ensure_ascii=False)}")
        return lines
    if command == "report":
        lines = []
        for section in ("relations", "constructions", "suites"):
            lines.append(f"{section}:")
            lines.extend(f"  {name}: {value}" for name, value in result[section].items())
        return lines
    return [f"{key}: {value}" for key, value in result.items()]


def bootstrap(args: argparse.Namespace) -> CommandDispatcher:
    settings = load_settings().with_overrides(fuel=args.fuel, stage=args.stage)
    setup_logger("app", level="DEBUG" if args.verbose else settings.log_level)
    container = setup_di_container(settings)
    load_components(container, list(settings.enabled_components) or DEFAULT_CELLS)
    return container.resolve(CommandDispatcher)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        dispatcher = bootstrap(args)
        result, code = run_command(args, dispatcher)
    except WorkbenchError as e:
        logger.debug("[CLI] 命令失败", exc_info=True)
        if args.json:
            print(json.dumps(e.to_dict(), sort_keys=True, ensure_ascii=False, default=str))
        print(f"error: {e.message}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(result, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print("\n".join(render(args.command, result)))
    return code


if __name__ == "__main__":
    sys.exit(main())
