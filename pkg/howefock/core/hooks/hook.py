# Copyright (c) Microsoft Corporation.
# Modifications Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.
# Ref: https://github.com/open-mmlab/mmcv/blob/master/mmcv/runner/hooks/hook.py


class Hook:
    stages = ("before_run", "before_check", "after_check", "after_run")

    def before_run(self, command):
        pass

    def before_check(self, command):
        pass

    def after_check(self, command):
        pass

    def after_run(self, command):
        pass

    def is_oracle(self, command):
        return getattr(command, "current_check", None) is not None
