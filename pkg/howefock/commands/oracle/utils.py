# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

import sys

from tqdm import tqdm

from howefock.core.hooks import Hook


class OracleProgressHook(Hook):
    """
    tqdm progress bar over the oracle checks, written to stderr
    """

    def __init__(self, total):
        super(OracleProgressHook, self).__init__()
        self.total = total
        self.bar = None

    def before_run(self, command):
        self.bar = tqdm(total=self.total, desc=command.name, file=sys.stderr, leave=False)

    def before_check(self, command):
        self.bar.set_postfix_str(command.current_check)

    def after_check(self, command):
        self.bar.update(1)

    def after_run(self, command):
        self.bar.close()
