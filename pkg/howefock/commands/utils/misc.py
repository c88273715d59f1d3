# Copyright (c) Microsoft Corporation.
# Modifications Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

import argparse

from howefock.combinat.partitions import as_generalized, parse_parts
from howefock.core.exceptions import ShapeError


class Howe_Argument(object):
    """
    Command specific argument
    """

    def __init__(self, name, type, default, help="", choices=None):
        """
        Command specific arguments should be added via this class.
        """
        self.name = name
        self.type = type
        self.default = default
        self.help = help
        self.choices = choices


def str2bool(v):
    """
    str to bool
    """
    if isinstance(v, bool):
        return v
    if v.lower() in ("yes", "true", "t", "y", "1"):
        return True
    elif v.lower() in ("no", "false", "f", "n", "0"):
        return False
    else:
        raise argparse.ArgumentTypeError("Boolean value expected.")


def parse_shape(args, key, required=True):
    """
    read a (generalized) partition from args.<key>; the value comes either
    from the command line ("2,1,-1") or from a yaml file (list or int)
    """
    value = getattr(args, key, None)
    if value is None or (isinstance(value, str) and value.strip() == ""):
        if required:
            raise ShapeError(f"--{key} is required")
        return None
    if isinstance(value, bool):
        raise ShapeError(f"--{key} expects a comma separated list of integers, got {value!r}")
    if isinstance(value, int):
        return as_generalized((value,))
    if isinstance(value, (list, tuple)):
        return as_generalized(tuple(int(v) for v in value))
    return parse_parts(str(value))
