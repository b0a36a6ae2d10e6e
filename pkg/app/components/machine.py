# -*- coding: utf-8 -*-
"""
机器组件
求值、分阶段枚举、smn 与不动点
"""

from typing import Any, Dict

from app.components.common import WorkbenchCell
from app.kernel.enumeration import View, certified_set, stream
from app.kernel.machine import Halted, evaluate
from app.kernel.numbering import decode
from app.kernel.recursion import fix, smn
from app.kernel.sexpr import to_text


class Machine(WorkbenchCell):
    """机器组件"""

    def _program(self, args: Dict[str, Any]) -> int:
        ref = args.get("program")
        if ref is None or ref == '' or isinstance(ref, int) or str(ref).isdigit():
            return self.natural(args, "program")
        return self.manifest(args).program(str(ref))

    def _cmd_eval(self, args: Any = None) -> Dict[str, Any]:
        """运行 φ_program(input)：{"program", "input", "fuel"}"""
        args = self.args_of(args)
        program = self._program(args)
        n = self.natural(args, "input")
        fuel = self.natural(args, "fuel", self.settings.fuel)
        outcome = evaluate(program, n, fuel)
        if isinstance(outcome, Halted):
            self.logger.info(f"[MACHINE] φ_{program}({n}) = {outcome.value}，{outcome.steps} 步")
            return {"status": "halted", "program": program, "input": n,
                    "value": outcome.value, "steps": outcome.steps}
        self.logger.info(f"[MACHINE] φ_{program}({n}) 在 {fuel} 燃料内未停机")
        return {"status": "out_of_fuel", "program": program, "input": n, "fuel": fuel}

    def _cmd_enumerate(self, args: Any = None) -> Dict[str, Any]:
        """分阶段枚举 W_e 或 ran φ_e：{"program", "stage", "range"}"""
        args = self.args_of(args)
        program = self._program(args)
        stage = self.natural(args, "stage", self.settings.stage)
        view = View.RANGE if args.get("range") else View.DOMAIN
        found = stream(program, view).discoveries(stage)
        exact = certified_set(program, stage, view)
        return {
            "program": program,
            "view": str(view),
            "stage": stage,
            "elements": [{"element": d.element, "stage": d.stage, "input": d.source} for d in found],
            "certified": sorted(exact) if exact is not None else None,
        }

    def _cmd_smn(self, args: Any = None) -> Dict[str, Any]:
        """smn(program, x)：{"program", "x"}"""
        args = self.args_of(args)
        program = self._program(args)
        return {"index": smn(program, self.natural(args, "x"))}

    def _cmd_fix(self, args: Any = None) -> Dict[str, Any]:
        """不动点 n，φ_n ≃ φ_{φ_program(n)}：{"program"}"""
        args = self.args_of(args)
        return {"index": fix(self._program(args))}

    def _cmd_show(self, args: Any = None) -> Dict[str, Any]:
        """编号对应的程序文本：{"program"}"""
        args = self.args_of(args)
        program = self._program(args)
        return {"index": program, "text": to_text(decode(program))}
