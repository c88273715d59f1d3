# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from howefock.commands.utils import Howe_Argument, str2bool
from howefock.core import CommandBase, ContextError, OracleFailure, TruncationMismatchError
from howefock.core.utils import COMMANDS, get_context
from howefock.representations import CharacterContext

from .checks import CHECKS
from .utils import OracleProgressHook

DEFAULT_CHECKS = "cauchy,cauchy_dual,hookschur,lr,fock"


def parse_checks(value):
    names = list(value) if isinstance(value, (list, tuple)) else [v.strip() for v in str(value).split(",") if v.strip()]
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise ContextError(f"unknown oracle checks {unknown}, choose from {sorted(CHECKS)}")
    if not names:
        raise ContextError("oracle needs at least one check")
    return names


@COMMANDS.register("oracle")
class OracleCommand(CommandBase):
    """
    Runs identity checks at the given sizes and reports, per check, pass or
    fail with the first differing coefficient.

    Args:
        - args (`argparse`):
            command arguments
        - checks (`str`):
            comma separated subset of cauchy, cauchy_dual, hookschur, lr, fock,
            howe, unitarity, branch, tensor
        - mu, nu (`str`):
            factors of the tensor check
        - fail_fast (`bool`):
            stop at the first failing check and raise OracleFailure
    """

    name = "oracle"

    def __init__(self, args, logger=None, **kwargs):
        super().__init__(args, logger, **kwargs)
        self.init(checks=args.checks, fail_fast=args.fail_fast, progress=getattr(args, "progress", False))

    def init(self, checks, fail_fast=False, progress=False):
        self.checks = parse_checks(checks)
        self.fail_fast = fail_fast
        if progress:
            self.register_hook(OracleProgressHook(len(self.checks)), None, "HIGH")

    def execute(self):
        if self.args.trunc is None:
            raise TruncationMismatchError("oracle needs --trunc")
        ctx = get_context(self.args, CharacterContext, trunc=self.args.trunc)

        for name in self.checks:
            result = self.run_check(name, lambda: CHECKS[name](ctx, self.args, self.threads))
            if not result["passed"]:
                self.status = 1
                if self.fail_fast:
                    raise OracleFailure(f"{name} failed: {self._describe(result)}")

        # timings are not part of the payload
        report = {
            name: {key: value for key, value in result.items() if key != "time"}
            for name, result in self.results_dict.items()
        }
        payload = {"checks": report, "passed": self.status == 0}
        lines = [f"{name}: {'pass' if result['passed'] else 'FAIL ' + self._describe(result)}" for name, result in report.items()]
        return self.emit(payload, "\n".join(lines))

    @staticmethod
    def _describe(result):
        diff = result["first_difference"]
        if diff is None:
            return ""
        return f"at {diff['monomial']}: {diff['left']} != {diff['right']}"

    @staticmethod
    def get_argument():
        return [
            Howe_Argument("--checks", str, DEFAULT_CHECKS, "comma separated list of checks"),
            Howe_Argument("--mu", str, "1", "first factor of the tensor check"),
            Howe_Argument("--nu", str, "1", "second factor of the tensor check"),
            Howe_Argument("--fail_fast", str2bool, False, "stop at the first failing check"),
        ]
