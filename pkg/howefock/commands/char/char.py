# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from howefock.commands.utils import Howe_Argument, parse_shape
from howefock.core import CommandBase, TruncationMismatchError
from howefock.core.utils import COMMANDS, get_context
from howefock.representations import CharacterContext, char_finite, char_finite_dual, char_W


@COMMANDS.register("char")
class CharCommand(CommandBase):
    """
    Characters as truncated Laurent series.

    Args:
        - args (`argparse`):
            command arguments
        - kind (`str`):
            "W" for ch W^{Lambda(lambda)}, "finite" for ch V^{lambda~}_{m|n},
            "dual" for ch V^{-d1+lambda*^}_{p|q}
    """

    name = "char"

    def __init__(self, args, logger=None, **kwargs):
        super().__init__(args, logger, **kwargs)
        self.init(la=parse_shape(args, "lambda"), kind=args.kind)

    def init(self, la, kind):
        self.la = la
        self.kind = kind

    def execute(self):
        args = self.args
        if self.kind == "W":
            if args.trunc is None:
                raise TruncationMismatchError("char --kind W needs --trunc")
            ctx = get_context(args, CharacterContext, trunc=args.trunc)
            series = char_W(self.la, ctx, threads=self.threads)
        elif self.kind == "finite":
            series = char_finite(self.la, args.m, args.n, args.trunc)
        else:
            series = char_finite_dual(self.la, args.p, args.q, args.d, args.trunc)
        self.print_fn(f"[{self.name}] {self.kind}: {len(series)} monomials")
        return self.emit(series.to_json(), series.to_text())

    @staticmethod
    def get_argument():
        return [
            Howe_Argument("--kind", str, "W", "which character to compute", choices=["W", "finite", "dual"]),
        ]
