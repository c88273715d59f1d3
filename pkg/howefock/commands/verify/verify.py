# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from howefock.commands.utils import Howe_Argument, parse_shape
from howefock.core import CommandBase, ShapeError
from howefock.core.utils import COMMANDS, get_context
from howefock.oscillator import certify, kernel_dimensions
from howefock.representations import howe_enumerate


def expected_kernel_dimensions(ctx, max_degree):
    """number of admissible lambda with sum |lambda_i| = D, for every D <= max_degree"""
    counts = {degree: 0 for degree in range(max_degree + 1)}
    for la in howe_enumerate(ctx.m, ctx.n, ctx.p, ctx.q, ctx.d, max_degree):
        counts[la.abs_size] += 1
    return counts


@COMMANDS.register("verify")
class VerifyCommand(CommandBase):
    """
    Certify box_lambda as a joint highest weight vector by operator calculus,
    and optionally compare joint highest weight kernels with the Howe labels.

    Args:
        - args (`argparse`):
            command arguments
        - degree (`int`):
            largest total degree of the kernel comparison, skipped when None
    """

    name = "verify"

    def __init__(self, args, logger=None, **kwargs):
        super().__init__(args, logger, **kwargs)
        self.init(la=parse_shape(args, "lambda", required=False), degree=args.degree)

    def init(self, la, degree):
        if la is None and degree is None:
            raise ShapeError("verify needs --lambda, --degree or both")
        if degree is not None and degree < 0:
            raise ShapeError(f"--degree must be non-negative, got {degree}")
        self.la = la
        self.degree = degree

    def execute(self):
        ctx = get_context(self.args)
        payload = {}
        if self.la is not None:
            payload = certify(self.la, ctx)
            if not (payload["annihilated_by_all_raising"] and payload["matches_Lambda"]):
                self.status = 1
        if self.degree is not None:
            found = kernel_dimensions(ctx, self.degree)
            expected = expected_kernel_dimensions(ctx, self.degree)
            rows = [
                {"degree": degree, "dimension": found[degree], "expected": expected[degree]}
                for degree in range(self.degree + 1)
            ]
            if any(row["dimension"] != row["expected"] for row in rows):
                self.status = 1
            payload["kernel"] = rows

        lines = [f"{key}: {value}" for key, value in payload.items() if key != "kernel"]
        for row in payload.get("kernel", []):
            lines.append(f"degree {row['degree']}: kernel {row['dimension']}, labels {row['expected']}")
        return self.emit(payload, "\n".join(lines))

    @staticmethod
    def get_argument():
        return [
            Howe_Argument("--degree", int, None, "compare kernel dimensions up to this total degree"),
        ]
