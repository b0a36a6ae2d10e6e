# -*- coding: utf-8 -*-
"""
核心设施：事件总线、依赖注入、配置、日志、命令分发与进程池
"""

import io

import pytest

from app.core.bus.event_bus import EventBus, EventPriority
from app.core.bus.event_models import SuiteCompletedEvent, VerifyStartedEvent
from app.core.bus.events import EventType
from app.core.di.container import get_container, injected, AutoInjectMeta
from app.core.exception import CommandNotFoundError, ComponentError
from app.core.handler.message_handler import CommandDispatcher
from app.core.util.components_loader import WorkbenchSettings, load_settings
from app.core.util.logger import setup_logger, timed_operation
from app.core.util.mp_manager import get_multiprocess_manager


def _square(x: int) -> int:
    return x * x


class TestEventBus:
    def test_publish_builds_typed_events(self, bus):
        received = []
        bus.subscribe(EventType.SUITE_COMPLETED, received.append)
        bus.publish(EventType.SUITE_COMPLETED, "paper-props", 3, 1)
        assert isinstance(received[0], SuiteCompletedEvent)
        assert received[0].failures == 1

    def test_priority_order(self, bus):
        order = []
        bus.subscribe(EventType.CELL_LOADED, lambda e: order.append("low"), EventPriority.LOW)
        bus.subscribe(EventType.CELL_LOADED, lambda e: order.append("high"), EventPriority.HIGH)
        bus.publish(EventType.CELL_LOADED, "machine")
        assert order == ["high", "low"]

    def test_once_and_patterns(self, bus):
        once, seen = [], []
        bus.subscribe_once(EventType.VERIFY_STARTED, once.append)
        bus.subscribe_pattern("verify.*", seen.append)
        for _ in range(2):
            bus.publish(EventType.VERIFY_STARTED, VerifyStartedEvent("w", 4, 100))
        bus.publish(EventType.SUITE_COMPLETED, "s", 0, 0)
        assert len(once) == 1
        assert [e.witness for e in seen] == ["w", "w"]

    def test_handler_errors_are_contained(self, bus):
        after = []

        def broken(event):
            raise RuntimeError("boom")

        bus.subscribe(EventType.CELL_LOADED, broken, EventPriority.HIGH)
        bus.subscribe(EventType.CELL_LOADED, after.append)
        bus.publish(EventType.CELL_LOADED, "machine")
        assert len(after) == 1

    def test_unsubscribe(self):
        local = EventBus()
        handler = lambda e: None  # noqa: E731
        local.subscribe(EventType.CELL_LOADED, handler)
        assert local.get_subscribers_count(EventType.CELL_LOADED) == 1
        local.unsubscribe(EventType.CELL_LOADED, handler)
        assert not local.has_subscribers(EventType.CELL_LOADED)


class TestContainer:
    def test_registered_services(self, container, workbench_settings):
        assert container.resolve(WorkbenchSettings) is workbench_settings
        assert isinstance(container.resolve(CommandDispatcher), CommandDispatcher)
        assert get_container() is container

    def test_factories_and_missing_services(self, container):
        class Service:
            pass

        container.register_factory(Service, Service, singleton=True)
        assert container.resolve(Service) is container.resolve(Service)
        container.clear()
        with pytest.raises(ValueError):
            container.resolve(Service)

    def test_injected_properties(self, container, workbench_settings):
        class Needs(metaclass=AutoInjectMeta):
            settings = injected(WorkbenchSettings)

        assert Needs().settings.stage == workbench_settings.stage


class TestSettings:
    def test_file_then_environment(self, tmp_path):
        path = tmp_path / "settings.yaml"
        path.write_text("workbench:\n  fuel: 500\n  stage: 40\n  bogus: 1\nlogging:\n  level: INFO\n",
                        encoding="utf-8")
        settings = load_settings(path, {"WORKBENCH_STAGE": "90"})
        assert (settings.fuel, settings.stage, settings.log_level) == (500, 90, "INFO")
        assert settings.samples == WorkbenchSettings().samples

    @pytest.mark.parametrize("value", ["abc", "0", "-5"])
    def test_bad_environment_values(self, tmp_path, value):
        with pytest.raises(ComponentError):
            load_settings(tmp_path / "absent.yaml", {"WORKBENCH_FUEL": value})

    def test_missing_or_broken_file(self, tmp_path):
        assert load_settings(tmp_path / "absent.yaml", {}) == WorkbenchSettings()
        broken = tmp_path / "broken.yaml"
        broken.write_text("- just\n- a list\n", encoding="utf-8")
        assert load_settings(broken, {}) == WorkbenchSettings()

    def test_bundled_settings(self):
        settings = load_settings(environ={})
        assert settings.stage == 10_000
        assert "app.components.verifier.Verifier" in settings.enabled_components

    def test_overrides_skip_none(self):
        settings = WorkbenchSettings().with_overrides(fuel=7, stage=None)
        assert (settings.fuel, settings.stage) == (7, WorkbenchSettings().stage)


class TestLogging:
    def test_logs_go_to_the_given_stream(self):
        stream = io.StringIO()
        log = setup_logger("app.test_stream", level="INFO", stream=stream)
        log.info("[TEST] 你好")
        log.debug("[TEST] hidden")
        assert stream.getvalue() == "[INFO] app.test_stream: [TEST] 你好\n"

    def test_repeated_setup_does_not_stack_handlers(self):
        for _ in range(3):
            log = setup_logger("app.test_repeat", stream=io.StringIO())
        assert len(log.handlers) == 1

    def test_timed_operation(self):
        stream = io.StringIO()
        log = setup_logger("app.test_timer", level="INFO", stream=stream)

        @timed_operation(log, "square")
        def work(x):
            return x * x

        assert work(4) == 16
        assert "[TIMER] 完成: square" in stream.getvalue()

        @timed_operation(log, "broken")
        def fail():
            raise ValueError("nope")

        with pytest.raises(ValueError):
            fail()
        assert "[TIMER] 失败: broken" in stream.getvalue()


class TestDispatcher:
    def test_parse_command(self):
        assert CommandDispatcher.parse_command("machine:eval:{\"input\": 1}") == ("machine", "eval", "{\"input\": 1}")
        assert CommandDispatcher.parse_command("relations:list") == ("relations", "list", "")
        for bad in ("machine", ":eval", "machine:"):
            with pytest.raises(ComponentError):
                CommandDispatcher.parse_command(bad)

    def test_parse_args(self):
        assert CommandDispatcher.parse_args("{\"a\": 1}") == {"a": 1}
        assert CommandDispatcher.parse_args("[1, 2]") == [1, 2]
        assert CommandDispatcher.parse_args("{broken") == "{broken"
        assert CommandDispatcher.parse_args("paper-props") == "paper-props"

    def test_unknown_cells_and_commands(self, cells):
        dispatcher = CommandDispatcher()
        with pytest.raises(ComponentError):
            dispatcher.dispatch("nobody:eval")
        with pytest.raises(CommandNotFoundError):
            dispatcher.dispatch("machine:nothing")
        failure = dispatcher.handle("machine:nothing")
        assert failure["ok"] is False
        assert failure["error"]["error"] == "CommandNotFoundError"

    def test_available_commands(self, cells):
        available = CommandDispatcher().available()
        assert sorted(available) == ["constructions", "machine", "relations", "verifier"]
        assert {"eval", "enumerate", "smn", "fix", "show"} <= set(available["machine"])


class TestMultiprocess:
    def test_sequential_map_keeps_order(self):
        manager = get_multiprocess_manager()
        manager.configure(0)
        assert not manager.is_enabled()
        assert manager.map(_square, [(3,), (1,), (2,)]) == [9, 1, 4]

    @pytest.mark.slow
    def test_pool_map_matches_sequential(self):
        manager = get_multiprocess_manager()
        try:
            manager.configure(2)
            assert manager.map(_square, [(k,) for k in range(6)]) == [k * k for k in range(6)]
        finally:
            manager.configure(0)
