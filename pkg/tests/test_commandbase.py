# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from argparse import Namespace

import pytest

from howefock.core import CommandBase
from howefock.core.hooks import Hook, Priority, get_priority


class RecordingHook(Hook):
    def __init__(self, events, tag):
        self.events = events
        self.tag = tag

    def before_run(self, command):
        self.events.append((self.tag, "before_run"))

    def after_check(self, command):
        self.events.append((self.tag, command.current_check))


class EchoCommand(CommandBase):
    name = "echo"

    def execute(self):
        self.run_check("first", lambda: {"passed": True, "value": 1})
        return self.emit({"b": 2, "a": 1}, "echo")


def make(fmt="text"):
    lines = []
    command = EchoCommand(Namespace(format=fmt, threads=1, m=1))
    command.print_fn = lines.append
    return command, lines


def test_default_hooks():
    command, _ = make()
    assert list(command.hooks_dict) == ["TimerHook", "LoggingHook"]


def test_hooks_run_by_priority():
    command, _ = make()
    events = []
    command.register_hook(RecordingHook(events, "late"), "late", "LOWEST")
    command.register_hook(RecordingHook(events, "early"), "early", "HIGHEST")
    assert list(command.hooks_dict)[0] == "early"
    command.run()
    assert events == [("early", "before_run"), ("late", "before_run"), ("early", "first"), ("late", "first")]


def test_run_check_fills_results():
    command, lines = make()
    assert command.run() == "echo"
    result = command.results_dict["first"]
    assert result["passed"] and result["value"] == 1
    assert "time" in result
    assert any(line.startswith("[echo/first] passed: True") for line in lines)
    assert lines[-1].startswith("[echo] finished in")
    assert command.current_check is None


def test_emit_json_is_sorted():
    command, _ = make("json")
    assert command.run() == '{"a": 1, "b": 2}'


def test_register_hook_validation():
    command, _ = make()
    hook = RecordingHook([], "x")
    hook.priority = 10
    with pytest.raises(ValueError):
        command.register_hook(hook)
    with pytest.raises(AssertionError):
        command.register_hook(object())


def test_get_priority():
    assert get_priority("high") == 30
    assert get_priority(Priority.LOW) == 70
    assert get_priority(5) == 5
    with pytest.raises(ValueError):
        get_priority(101)
    with pytest.raises(TypeError):
        get_priority(1.5)
