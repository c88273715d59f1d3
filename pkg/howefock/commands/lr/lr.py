# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from howefock.commands.utils import Howe_Argument, parse_shape
from howefock.core import CommandBase
from howefock.core.utils import COMMANDS
from howefock.symfunc import lr_coefficient, lr_coefficient_generalized


@COMMANDS.register("lr")
class LRCommand(CommandBase):
    """
    Littlewood-Richardson coefficient C^lambda_{mu,nu}.

    Generalized partitions are accepted as soon as one of the three shapes
    has a negative part; all three must then share the same length.

    Args:
        - args (`argparse`):
            command arguments
        - lambda (`str`):
            outer shape
        - mu (`str`):
            first factor
        - nu (`str`):
            second factor
    """

    name = "lr"

    def __init__(self, args, logger=None, **kwargs):
        super().__init__(args, logger, **kwargs)
        self.init(la=parse_shape(args, "lambda"), mu=parse_shape(args, "mu"), nu=parse_shape(args, "nu"))

    def init(self, la, mu, nu):
        self.la = la
        self.mu = mu
        self.nu = nu

    def execute(self):
        shapes = (self.la, self.mu, self.nu)
        if all(shape.is_partition() for shape in shapes):
            value = lr_coefficient(*shapes)
        else:
            value = lr_coefficient_generalized(*shapes)
        payload = {
            "lambda": list(self.la.parts),
            "mu": list(self.mu.parts),
            "nu": list(self.nu.parts),
            "value": str(value),
        }
        return self.emit(payload, str(value))

    @staticmethod
    def get_argument():
        return [
            Howe_Argument("--mu", str, "", "first factor, e.g. 2,1"),
            Howe_Argument("--nu", str, "", "second factor, e.g. 2,1"),
        ]
