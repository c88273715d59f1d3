# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from howefock.commands.utils import Howe_Argument, parse_shape
from howefock.core import CommandBase, ContextError
from howefock.core.utils import COMMANDS, get_context
from howefock.representations import tensor_decompose


@COMMANDS.register("tensor")
class TensorCommand(CommandBase):
    """
    Tensor product W^{Lambda(mu)} (x) W^{Lambda(nu)}, enumerated over shifts d <= d_max.

    Args:
        - args (`argparse`):
            command arguments
        - mu (`str`):
            label of the first factor, length l
        - nu (`str`):
            label of the second factor, length r
        - d_max (`int`):
            largest shift, defaults to --bound and then --trunc
    """

    name = "tensor"

    def __init__(self, args, logger=None, **kwargs):
        super().__init__(args, logger, **kwargs)
        self.init(mu=parse_shape(args, "mu"), nu=parse_shape(args, "nu"), d_max=args.d_max)

    def init(self, mu, nu, d_max):
        self.mu = mu
        self.nu = nu
        for fallback in (self.args.bound, self.args.trunc):
            if d_max is None:
                d_max = fallback
        if d_max is None:
            raise ContextError("tensor needs --d_max, --bound or --trunc")
        self.d_max = d_max

    def execute(self):
        ctx = get_context(self.args)
        table = tensor_decompose(self.mu, self.nu, ctx, d_max=self.d_max, threads=self.threads)
        if not table.complete and self.logger is not None:
            self.logger.warning("tensor product table is incomplete beyond d_max = %d", self.d_max)
        return self.emit(table.to_json(), table.to_text())

    @staticmethod
    def get_argument():
        return [
            Howe_Argument("--mu", str, "", "label of the first factor"),
            Howe_Argument("--nu", str, "", "label of the second factor"),
            Howe_Argument("--d_max", int, None, "largest shift d to enumerate"),
        ]
