# -*- coding: utf-8 -*-
"""
命令分发器
把统一格式的命令字符串分发给组件

命令格式：组件名:命令:参数
例如：
    machine:eval:{"program": "(succ)", "input": 7}
    verifier:suite:paper-props
参数以 '{' 或 '[' 开头时按 JSON 解析，否则原样作为字符串传入。
"""

import json
import logging
from typing import Any, Dict, Optional, Tuple

from ..exception import ComponentError, WorkbenchError
from ..interface.icell import ICell
from ..util.components_loader import get_all_cells, get_cell

logger = logging.getLogger(__name__)


class CommandDispatcher:
    def get_cell(self, name: str) -> Optional[ICell]:
        """根据名称获取组件（从全局注册表）"""
        return get_cell(name)

    @staticmethod
    def parse_command(command: str) -> Tuple[str, str, str]:
        """拆成 (组件名, 命令, 参数字符串)；格式不对时抛出 ComponentError"""
        parts = command.split(':', 2)
        if len(parts) < 2 or not parts[0] or not parts[1]:
            raise ComponentError(f"invalid command format: '{command}' (expected cell:command[:args])")
        return parts[0], parts[1], parts[2] if len(parts) > 2 else ''

    @staticmethod
    def parse_args(args: str) -> Any:
        if args.startswith(('{', '[')):
            try:
                return json.loads(args)
            except json.JSONDecodeError:
                logger.debug(f"[DISPATCH] JSON 解析失败，保持原字符串: {args}")
        return args

    def dispatch(self, command: str) -> Any:
        """执行命令并返回结果；失败时抛出 WorkbenchError"""
        cell_name, cmd, args_str = self.parse_command(command)
        cell = self.get_cell(cell_name)
        if cell is None:
            raise ComponentError(f"cell '{cell_name}' not found", cell_name)
        logger.info(f"[DISPATCH] 执行命令: {cell_name}:{cmd}")
        args = self.parse_args(args_str)
        if args == '':
            return cell.execute(cmd)
        return cell.execute(cmd, args)

    def handle(self, command: str) -> Dict[str, Any]:
        """与 dispatch 相同，但把错误折叠成 {"ok": False, "error": ...}"""
        try:
            return {"ok": True, "result": self.dispatch(command)}
        except WorkbenchError as e:
            logger.error(f"[DISPATCH] 命令执行失败: {command}, 错误: {e.message}")
            return {"ok": False, "error": e.to_dict()}

    def available(self) -> Dict[str, Dict[str, str]]:
        """{组件名: {命令: 描述}}"""
        return {name: cell.get_commands() for name, cell in sorted(get_all_cells().items())}
