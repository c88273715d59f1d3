# Copyright (c) Microsoft Corporation.
# Modifications Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

import time

from .hook import Hook


class TimerHook(Hook):
    """
    Timer Hook
    """

    def before_run(self, command):
        command.start_run = time.perf_counter()

    def before_check(self, command):
        command.start_check = time.perf_counter()

    def after_check(self, command):
        command.log_dict["time"] = time.perf_counter() - command.start_check

    def after_run(self, command):
        command.log_dict["run_time"] = time.perf_counter() - command.start_run
