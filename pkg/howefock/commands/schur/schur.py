# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from howefock.combinat.partitions import SkewShape, as_partition
from howefock.commands.utils import Howe_Argument, parse_shape
from howefock.core import CommandBase, ContextError
from howefock.core.utils import COMMANDS
from howefock.symfunc import VariableSet, schur_laurent, skew_schur


@COMMANDS.register("schur")
class SchurCommand(CommandBase):
    """
    Schur polynomial s_lambda(x_1..x_k), or the skew polynomial
    s_{lambda/mu} when an inner shape is given. Generalized partitions give
    Laurent polynomials and need k equal to their length.

    Args:
        - args (`argparse`):
            command arguments
        - k (`int`):
            number of variables, defaults to the length of lambda
        - mu (`str`):
            inner shape of a skew diagram
    """

    name = "schur"

    def __init__(self, args, logger=None, **kwargs):
        super().__init__(args, logger, **kwargs)
        self.init(la=parse_shape(args, "lambda"), inner=parse_shape(args, "mu", required=False), k=args.k)

    def init(self, la, inner, k):
        self.la = la
        self.inner = inner
        self.k = la.length if k is None else k
        if self.k < 0:
            raise ContextError(f"--k must be non-negative, got {self.k}")

    def execute(self):
        x = VariableSet("x", self.k)
        trunc = self.args.trunc
        if self.inner is not None:
            shape = SkewShape(as_partition(self.la), as_partition(self.inner))
            series = skew_schur(shape, x, trunc)
        else:
            series = schur_laurent(self.la, x, trunc)
        self.print_fn(f"[{self.name}] {len(series)} monomials")
        return self.emit(series.to_json(), series.to_text())

    @staticmethod
    def get_argument():
        return [
            Howe_Argument("--k", int, None, "number of variables"),
            Howe_Argument("--mu", str, "", "inner shape of a skew diagram"),
        ]
