# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from howefock.commands.utils import Howe_Argument, parse_shape
from howefock.core import CommandBase, ContextError
from howefock.core.utils import COMMANDS
from howefock.symfunc import VariableSet, hook_schur_skew, hook_schur_tableau


@COMMANDS.register("hookschur")
class HookSchurCommand(CommandBase):
    """
    Hook Schur function HS_lambda(x_1..x_m; y_1..y_n).

    Args:
        - args (`argparse`):
            command arguments
        - method (`str`):
            "skew" sums s_mu(x) s_{lambda'/mu'}(y), "tableau" enumerates (m|n)-semistandard tableaux
    """

    name = "hookschur"

    def __init__(self, args, logger=None, **kwargs):
        super().__init__(args, logger, **kwargs)
        self.init(la=parse_shape(args, "lambda"), method=args.method)

    def init(self, la, method):
        self.la = la
        self.method = method

    def execute(self):
        m, n = self.args.m, self.args.n
        if m < 0 or n < 0:
            raise ContextError(f"m and n must be non-negative, got ({m}, {n})")
        x, y = VariableSet("x", m), VariableSet("y", n)
        compute = hook_schur_skew if self.method == "skew" else hook_schur_tableau
        series = compute(self.la, x, y, self.args.trunc)
        return self.emit(series.to_json(), series.to_text())

    @staticmethod
    def get_argument():
        return [
            Howe_Argument("--method", str, "skew", "expansion used to compute HS_lambda", choices=["skew", "tableau"]),
        ]
