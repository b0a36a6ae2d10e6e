# -*- coding: utf-8 -*-
"""
组件命令与命令行入口
"""

import json

import pytest

from app.core.di.container import get_container
from app.core.exception import ComponentError
from app.core.handler.message_handler import CommandDispatcher
from app.core.util.components_loader import clear_registry
from main import EXIT_OK, EXIT_OUT_OF_FUEL, EXIT_REFUTED, EXIT_USAGE, main


@pytest.fixture
def cli(bus, monkeypatch):
    """每次调用 main 前后清空组件注册表与容器"""
    monkeypatch.delenv("WORKBENCH_FUEL", raising=False)
    monkeypatch.delenv("WORKBENCH_STAGE", raising=False)
    clear_registry()
    get_container().clear()

    def run(*argv):
        bus.clear()
        clear_registry()
        return main(list(argv))

    yield run
    clear_registry()
    get_container().clear()


class TestCells:
    def test_machine_commands(self, cells):
        dispatcher = CommandDispatcher()
        result = dispatcher.dispatch('machine:eval:{"program": "(comp succ (pair (const 3) ident))", "input": 5}')
        assert (result["status"], result["value"], result["steps"]) == ("halted", 42, 5)
        shown = dispatcher.dispatch('machine:show:{"program": "succ"}')
        assert shown["text"] == "succ"
        listing = dispatcher.dispatch('machine:enumerate:{"program": "identity", "stage": 100}')
        assert [d["element"] for d in listing["elements"]] == list(range(10))
        assert listing["certified"] is None

    def test_argument_errors(self, cells):
        dispatcher = CommandDispatcher()
        with pytest.raises(ComponentError):
            dispatcher.dispatch('relations:query:{"relation": "delta3", "m": "x", "n": 1}')
        with pytest.raises(ComponentError):
            dispatcher.dispatch("relations:query:[1, 2]")
        with pytest.raises(ComponentError):
            dispatcher.dispatch('machine:eval:{"program": "succ"}')

    def test_relations_commands(self, cells):
        dispatcher = CommandDispatcher()
        verdict = dispatcher.dispatch('relations:query:{"relation": "delta3", "m": 2, "n": 7}')
        assert (verdict["answer"], verdict["certainty"]) == ("related", "final")
        finite = dispatcher.dispatch('relations:finite:{"blocks": [0, 1], "other": [0, 1, 2]}')
        assert finite["jump_block_count"] == 4
        assert finite["reducible"]["reducible"] and not finite["bireducible"]
        assert "delta3" in dispatcher.dispatch("relations:list")

    def test_notation_command(self, cells):
        dispatcher = CommandDispatcher()
        result = dispatcher.dispatch('constructions:notation:{"kleene": 4, "succ": 1}')
        assert result == {"notation": "3", "compact": 10, "kleene": 16}
        assert dispatcher.dispatch('constructions:notation:{"kleene": 3}')["notation"] == "lim[0]"

    def test_verifier_records_refutations(self, cells):
        dispatcher = CommandDispatcher()
        report = dispatcher.dispatch('verifier:item:{"witness": "const_into_jump", "params": {"E": "delta4"}, '
                                     '"inject_fault": true, "pairs": [[0, 3]], "stage": 2000}')
        assert len(report["refutations"]) == 1
        assert cells["Verifier"].refutations[0]["m"] == 0
        dispatcher.dispatch('verifier:item:{"witness": "const_into_jump", "params": {"E": "delta4"}, '
                            '"inject_fault": true, "pairs": [[0, 3]], "stage": 2000}')
        assert len(cells["Verifier"].refutations) == 1
        dispatcher.dispatch('verifier:item:{"witness": "const_into_jump", "params": {"E": "delta4"}, '
                            '"pairs": [[0, 3]], "stage": 2000}')
        assert cells["Verifier"].refutations == []
        assert "aux-set" in dispatcher.dispatch("verifier:suites")


class TestCommandLine:
    def test_eval(self, cli, capsys):
        assert cli("eval", "(comp succ (pair (const 3) ident))", "5") == EXIT_OK
        assert capsys.readouterr().out == "Halted 42 (steps 5)\n"

    def test_eval_out_of_fuel(self, cli, capsys):
        assert cli("--fuel", "100", "eval", "diverge", "0") == EXIT_OUT_OF_FUEL
        assert capsys.readouterr().out == "OutOfFuel (fuel 100)\n"

    def test_environment_overrides(self, cli, capsys, monkeypatch):
        monkeypatch.setenv("WORKBENCH_FUEL", "50")
        assert cli("eval", "diverge", "0") == EXIT_OUT_OF_FUEL
        assert capsys.readouterr().out == "OutOfFuel (fuel 50)\n"
        monkeypatch.setenv("WORKBENCH_FUEL", "lots")
        assert cli("eval", "diverge", "0") == EXIT_USAGE

    def test_query_json(self, cli, capsys):
        assert cli("--json", "query", "delta3", "2", "7") == EXIT_OK
        result = json.loads(capsys.readouterr().out)
        assert (result["answer"], result["certainty"]) == ("related", "final")

    def test_workbench_errors(self, cli, capsys):
        assert cli("query", "missing", "0", "1") == EXIT_USAGE
        assert "error:" in capsys.readouterr().err
        assert cli("construct", "const_into_jump", "--param", "novalue") == EXIT_USAGE

    def test_usage_errors(self, cli):
        with pytest.raises(SystemExit) as info:
            cli("eval")
        assert info.value.code == EXIT_USAGE

    @pytest.mark.parametrize("argv", [
        ("--fuel", "-5", "eval", "diverge", "0"),
        ("--stage", "-1", "query", "delta3", "0", "1"),
        ("--fuel", "many", "eval", "diverge", "0"),
        ("verify", "--samples", "-2"),
    ])
    def test_negative_limits_are_usage_errors(self, cli, capsys, argv):
        with pytest.raises(SystemExit) as info:
            cli(*argv)
        assert info.value.code == EXIT_USAGE
        assert "natural number" in capsys.readouterr().err

    def test_construct(self, cli, capsys):
        assert cli("--json", "construct", "const_into_jump", "--param", "E=delta3") == EXIT_OK
        result = json.loads(capsys.readouterr().out)
        assert result["construction"] == "const_into_jump"
        assert result["target"] == "Delta(3)+"

    def test_custom_manifest(self, cli, capsys, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(json.dumps({"relations": {"d": {"kind": "delta", "k": 2}}}), encoding="utf-8")
        assert cli("--manifest", str(path), "query", "d", "0", "1") == EXIT_OK
        assert capsys.readouterr().out.startswith("unrelated final")

    def test_report(self, cli, capsys):
        assert cli("report") == EXIT_OK
        out = capsys.readouterr().out
        assert "relations:" in out and "constructions:" in out and "suites:" in out

    def test_fault_injection_suite(self, cli, capsys):
        assert cli("--json", "verify", "--suite", "fault-injection") == EXIT_REFUTED
        first = capsys.readouterr().out
        refuted = json.loads(first)["reports"][0]["refutations"]
        assert [(row["m"], row["n"]) for row in refuted] == [(0, 3)]
        assert cli("--json", "verify", "--suite", "fault-injection") == EXIT_REFUTED
        assert capsys.readouterr().out == first

    @pytest.mark.slow
    def test_default_suite_is_deterministic(self, cli, capsys):
        code = cli("--json", "verify")
        first = capsys.readouterr().out
        assert cli("--json", "verify") == code
        assert capsys.readouterr().out == first
        assert json.loads(first)["suite"] == "paper-props"
