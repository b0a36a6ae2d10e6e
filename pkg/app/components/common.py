# -*- coding: utf-8 -*-
"""
工作台组件的公共基类
"""

from typing import Any, Dict, Mapping

from app.core.exception import ComponentError
from app.core.interface.base_cell import BaseCell
from app.core.di.container import injected
from app.core.util.components_loader import WorkbenchSettings, get_manifest_path
from app.relations.manifest import Manifest, cached_manifest


class WorkbenchCell(BaseCell):
    """命令参数是 JSON 对象；"manifest" 缺省为随附清单"""

    settings = injected(WorkbenchSettings)

    def args_of(self, args: Any) -> Dict[str, Any]:
        if args is None or args == '':
            return {}
        if not isinstance(args, Mapping):
            raise ComponentError("command arguments must be a JSON object", self.cell_name)
        return dict(args)

    def manifest(self, args: Mapping[str, Any]) -> Manifest:
        return cached_manifest(str(args.get("manifest") or get_manifest_path()))

    def natural(self, args: Mapping[str, Any], key: str, default: Any = None) -> int:
        value = args.get(key, default)
        if value is None:
            raise ComponentError(f"missing argument '{key}'", self.cell_name)
        if isinstance(value, str) and value.isdigit():
            value = int(value)
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ComponentError(f"argument '{key}' must be a natural number", self.cell_name)
        return value

    def text(self, args: Mapping[str, Any], key: str) -> str:
        value = args.get(key)
        if value is None or value == '':
            raise ComponentError(f"missing argument '{key}'", self.cell_name)
        return str(value)
