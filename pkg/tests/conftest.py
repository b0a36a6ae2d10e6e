# -*- coding: utf-8 -*-
"""
测试公共夹具
"""

import pytest
from hypothesis import settings

from app.core.bus.event_bus import get_event_bus
from app.core.di.container import get_container, setup_di_container
from app.core.util.components_loader import WorkbenchSettings, clear_registry, get_manifest_path, load_components
from app.relations.manifest import cached_manifest

settings.register_profile("workbench", max_examples=60, deadline=None)
settings.load_profile("workbench")

CELLS = [
    "app.components.machine.Machine",
    "app.components.relations.Relations",
    "app.components.constructions.Constructions",
    "app.components.verifier.Verifier",
]


@pytest.fixture
def bus():
    """干净的全局事件总线"""
    event_bus = get_event_bus()
    event_bus.clear()
    yield event_bus
    event_bus.clear()


@pytest.fixture
def workbench_settings():
    return WorkbenchSettings(fuel=20_000, stage=1_000, samples=10)


@pytest.fixture
def container(bus, workbench_settings):
    """按测试用的设置注册服务"""
    clear_registry()
    get_container().clear()
    yield setup_di_container(workbench_settings)
    clear_registry()
    get_container().clear()


@pytest.fixture
def cells(container):
    """加载四个工作台组件"""
    return load_components(container, CELLS)


@pytest.fixture(scope="session")
def manifest():
    """随附清单"""
    return cached_manifest(str(get_manifest_path()))
