# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from howefock.commands.utils import parse_shape
from howefock.core import CommandBase, ContextError
from howefock.core.utils import COMMANDS, get_context
from howefock.representations import branch


@COMMANDS.register("branch")
class BranchCommand(CommandBase):
    """
    Branching of W^{Lambda(lambda)} to gl(p|q) x gl(m|n), with |mu| up to --bound
    (or --trunc when no bound is given).
    """

    name = "branch"

    def execute(self):
        args = self.args
        bound = args.bound if args.bound is not None else args.trunc
        if bound is None:
            raise ContextError("branch needs --bound or --trunc")
        ctx = get_context(args)
        table = branch(parse_shape(args, "lambda"), ctx, bound)
        self.print_fn(f"[{self.name}] {len(table)} constituents, complete={table.complete}")
        return self.emit(table.to_json(), table.to_text())
