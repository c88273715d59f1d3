# Copyright (c) Microsoft Corporation.
# Modifications Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.
# Ref:https://github.com/open-mmlab/mmcv/blob/master/mmcv/runner/hooks/logger/base.py

from .hook import Hook


class LoggingHook(Hook):
    """
    Logging Hook for printing check results and run times
    """

    def before_run(self, command):
        command.print_fn(f"[{command.name}] arguments: {command.describe()}")

    def after_check(self, command):
        """must be called after the check has filled log_dict"""
        print_text = f"[{command.name}/{command.current_check}] "
        for i, (key, item) in enumerate(command.log_dict.items()):
            if isinstance(item, float):
                print_text += "{:s}: {:.4f}".format(key, item)
            else:
                print_text += "{:s}: {}".format(key, item)
            if i != len(command.log_dict) - 1:
                print_text += ", "
        command.print_fn(print_text)

    def after_run(self, command):
        command.print_fn("[{:s}] finished in {:.4f}s".format(command.name, command.log_dict.get("run_time", 0.0)))
