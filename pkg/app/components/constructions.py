# -*- coding: utf-8 -*-
"""
构造组件
"""

from typing import Any, Dict

from app.components.common import WorkbenchCell
from app.constructions import registry
from app.core.exception import ComponentError
from app.jump.notation import compact, describe, from_kleene, kleene_code, notation_lim, notation_succ


class Constructions(WorkbenchCell):
    """构造组件"""

    def _cmd_build(self, args: Any = None) -> Dict[str, Any]:
        """按名称构造并返回描述：{"name", "params"}"""
        args = self.args_of(args)
        name = self.text(args, "name")
        params = args.get("params") or {}
        if not isinstance(params, dict):
            raise ComponentError("argument 'params' must be an object", self.cell_name)
        built = registry.build(name, params, self.manifest(args))
        return {"construction": name, **built.describe()}

    def _cmd_list(self, args: Any = None) -> Dict[str, str]:
        """可用的构造及其说明"""
        return registry.summaries()

    def _cmd_notation(self, args: Any = None) -> Dict[str, Any]:
        """记号的各种编码：{"kleene"} 或 {"lim": 序列程序, "succ": 层数}"""
        args = self.args_of(args)
        if "kleene" in args:
            a = from_kleene(self.natural(args, "kleene"))
        elif "lim" in args:
            sequence = self.manifest(args).program(args["lim"])
            a = notation_lim(sequence, n_check=self.settings.n_check, fuel=self.settings.fuel)
        else:
            raise ComponentError("expected 'kleene' or 'lim'", self.cell_name)
        for _ in range(self.natural(args, "succ", 0)):
            a = notation_succ(a)
        return {
            "notation": describe(a),
            "compact": compact(a),
            "kleene": kleene_code(a, self.settings.notation_code_cap),
        }
