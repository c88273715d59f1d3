# Copyright (c) Microsoft Corporation.
# Modifications Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

import json
from collections import OrderedDict

from howefock.core.hooks import Hook, LoggingHook, TimerHook, get_priority


class CommandBase:
    """
    Base class for commands
    holds the parsed arguments, the logger and the registered hooks

    Args:
        - args (`argparse`):
            command arguments
        - logger (`logging.Logger`):
            logger to use
    """

    name = "command"

    def __init__(self, args, logger=None, **kwargs):
        # common arguments
        self.args = args
        self.fmt = getattr(args, "format", "text")
        self.threads = getattr(args, "threads", 1)

        # common utils arguments
        self.logger = logger
        self.print_fn = print if logger is None else logger.info
        self.status = 0
        self.log_dict = {}
        self.results_dict = OrderedDict()
        self.current_check = None

        # set common hooks during a run
        self._hooks = []
        self.hooks_dict = OrderedDict()
        self.set_hooks()

    def set_hooks(self):
        """
        register the hooks every command runs with
        """
        self.register_hook(TimerHook(), None, "LOW")
        self.register_hook(LoggingHook(), None, "LOWEST")

    def describe(self):
        return ", ".join(f"{key}={value}" for key, value in sorted(vars(self.args).items()) if value is not None)

    def execute(self):
        """
        command specific computation, returns the text printed on stdout
        """
        raise NotImplementedError

    def run(self):
        """
        run the command between the before_run and after_run hooks
        """
        self.call_hook("before_run")
        output = self.execute()
        self.call_hook("after_run")
        return output

    def run_check(self, check_name, check_fn):
        """
        run a single named check between the before_check and after_check hooks.
        check_fn returns a dict which is merged into log_dict and results_dict.
        """
        self.current_check = check_name
        self.log_dict = {}
        self.call_hook("before_check")
        result = check_fn()
        self.log_dict.update(result)
        self.call_hook("after_check")
        self.results_dict[check_name] = dict(self.log_dict)
        self.current_check = None
        return self.results_dict[check_name]

    def emit(self, payload, text):
        """
        format a result: payload is dumped as stable JSON, text is used otherwise
        """
        if self.fmt == "json":
            return json.dumps(payload, sort_keys=True)
        return text

    def register_hook(self, hook, name=None, priority="NORMAL"):
        """
        Ref: https://github.com/open-mmlab/mmcv/blob/a08517790d26f8761910cac47ce8098faac7b627/mmcv/runner/base_runner.py#L263  # noqa: E501
        Register a hook into the hook list.
        The hook will be inserted into a priority queue, with the specified
        priority (See :class:`Priority` for details of priorities).
        For hooks with the same priority, they will be triggered in the same
        order as they are registered.
        Args:
            hook (:obj:`Hook`): The hook to be registered.
            name (:str, default to None): Name of the hook to be registered.
                Default is the hook class name.
            priority (int or str or :obj:`Priority`): Hook priority.
                Lower value means higher priority.
        """
        assert isinstance(hook, Hook)
        if hasattr(hook, "priority"):
            raise ValueError('"priority" is a reserved attribute for hooks')
        priority = get_priority(priority)
        hook.priority = priority  # type: ignore
        hook.name = name if name is not None else type(hook).__name__

        # insert the hook to a sorted list
        inserted = False
        for i in range(len(self._hooks) - 1, -1, -1):
            if priority >= self._hooks[i].priority:  # type: ignore
                self._hooks.insert(i + 1, hook)
                inserted = True
                break

        if not inserted:
            self._hooks.insert(0, hook)

        self.hooks_dict = OrderedDict()
        for hook in self._hooks:
            self.hooks_dict[hook.name] = hook

    def call_hook(self, fn_name, hook_name=None, *args, **kwargs):
        """Call all hooks.
        Args:
            fn_name (str): The function name in each hook to be called, such as
                "before_check".
            hook_name (str): The specific hook name to be called.
        """

        if hook_name is not None:
            return getattr(self.hooks_dict[hook_name], fn_name)(self, *args, **kwargs)

        for hook in self.hooks_dict.values():
            if hasattr(hook, fn_name):
                getattr(hook, fn_name)(self, *args, **kwargs)

    def registered_hook(self, hook_name):
        """
        Check if a hook is registered
        """
        return hook_name in self.hooks_dict

    @staticmethod
    def get_argument():
        """
        Get specified arguments into argparse for each command
        """
        return []
