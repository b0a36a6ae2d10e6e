# -*- coding: utf-8 -*-
"""
配置与组件加载

config/settings.yaml 给出启用的组件和工作台缺省值；环境变量
WORKBENCH_FUEL / WORKBENCH_STAGE 覆盖文件中的值，命令行参数再覆盖两者。
"""

import importlib
import logging
import os
import pathlib
import sys
from dataclasses import dataclass, replace
from typing import Any, Dict, List, Mapping, Optional

import yaml

from app.core.bus.event_bus import get_event_bus
from app.core.bus.event_models import CellLoadedEvent
from app.core.bus.events import EventType
from app.core.di.container import DIContainer
from app.core.exception import ComponentError
from app.core.interface.icell import ICell

logger = logging.getLogger(__name__)

_cell_registry: Dict[str, ICell] = {}

ENV_FUEL = "WORKBENCH_FUEL"
ENV_STAGE = "WORKBENCH_STAGE"


@dataclass(frozen=True)
class WorkbenchSettings:
    """工作台缺省值"""
    fuel: int = 100_000
    stage: int = 10_000
    samples: int = 64
    n_check: int = 8
    notation_code_cap: int = 4096
    parallel_verify: bool = False
    workers: int = -1
    log_level: str = "WARNING"
    enabled_components: tuple = ()

    def with_overrides(self, **overrides: Any) -> "WorkbenchSettings":
        """忽略值为 None 的覆盖项"""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def get_all_cells() -> Dict[str, ICell]:
    """获取所有已注册的组件"""
    return _cell_registry


def register_cell(cell: ICell):
    """注册组件到全局注册表"""
    _cell_registry[cell.cell_name] = cell
    logger.debug(f"[CELL] 组件已注册: {cell.cell_name}")


def get_cell(name: str) -> Optional[ICell]:
    """根据名称获取组件"""
    return _cell_registry.get(name)


def clear_registry():
    """清空注册表"""
    _cell_registry.clear()


def get_config_path() -> pathlib.Path:
    """获取配置文件路径"""
    if getattr(sys, 'frozen', False) and hasattr(sys, '_MEIPASS'):
        base_path = pathlib.Path(sys._MEIPASS)
    else:
        base_path = pathlib.Path(__file__).resolve().parent.parent.parent.parent
    return base_path / "config" / "settings.yaml"


def get_manifest_path() -> pathlib.Path:
    """随附的清单 config/manifests/workbench.json"""
    return get_config_path().parent / "manifests" / "workbench.json"


def load_component_config(config_path: pathlib.Path) -> Dict[str, Any]:
    """读取 settings.yaml；文件缺失或无法解析时返回空配置"""
    if not config_path.exists():
        logger.warning(f"[CONFIG] 配置文件不存在: {config_path}")
        return {}
    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            config = yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        logger.error(f"[CONFIG] 加载配置文件失败: {e}")
        return {}
    if not isinstance(config, dict):
        logger.error(f"[CONFIG] 配置文件顶层必须是映射: {config_path}")
        return {}
    return config


def _env_int(name: str, environ: Mapping[str, str]) -> Optional[int]:
    raw = environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ComponentError(f"{name} must be an integer, got '{raw}'") from None
    if value < 1:
        raise ComponentError(f"{name} must be positive, got {value}")
    return value


def load_settings(config_path: Optional[pathlib.Path] = None,
                  environ: Optional[Mapping[str, str]] = None) -> WorkbenchSettings:
    """文件 → 环境变量，依次覆盖缺省值"""
    config = load_component_config(config_path or get_config_path())
    environ = os.environ if environ is None else environ
    workbench = config.get("workbench") or {}
    logging_conf = config.get("logging") or {}

    defaults = WorkbenchSettings()
    known = {k: workbench[k] for k in ("fuel", "stage", "samples", "n_check", "notation_code_cap",
                                       "parallel_verify", "workers") if k in workbench}
    unknown = sorted(set(workbench) - set(known))
    if unknown:
        logger.warning(f"[CONFIG] 忽略未知的 workbench 配置项: {unknown}")

    settings = defaults.with_overrides(
        **known,
        log_level=logging_conf.get("level"),
        enabled_components=tuple(config.get("enabled_components") or ()),
    )
    settings = settings.with_overrides(fuel=_env_int(ENV_FUEL, environ), stage=_env_int(ENV_STAGE, environ))
    logger.debug(f"[CONFIG] {settings}")
    return settings


def dynamic_import(module_path: str) -> Any:
    """动态导入 module.Class"""
    parts = module_path.rsplit('.', 1)
    if len(parts) != 2:
        raise ValueError(f"invalid component path: {module_path}")
    module_name, class_name = parts
    module = importlib.import_module(module_name)
    return getattr(module, class_name)


def load_components(container: DIContainer, component_list: List[str]) -> Dict[str, Any]:
    """实例化组件并注册到容器和组件注册表

    Returns:
        已加载组件的字典 {类名: 实例}
    """
    loaded_components = {}
    for component_path in component_list:
        try:
            component_class = dynamic_import(component_path)
            instance = component_class()
        except (ImportError, AttributeError, ValueError) as e:
            logger.error(f"[CELL] 组件加载失败 {component_path}: {e}")
            continue

        container.register(component_class, instance)
        loaded_components[component_class.__name__] = instance
        if isinstance(instance, ICell):
            register_cell(instance)
            if hasattr(instance, 'on_load'):
                instance.on_load()
            get_event_bus().publish(EventType.CELL_LOADED, CellLoadedEvent(instance.cell_name))
        logger.debug(f"[CELL] 已加载组件: {component_class.__name__}")

    logger.info(f"[CELL] 组件加载完成，共加载 {len(loaded_components)} 个组件")
    return loaded_components
