# Copyright (c) Microsoft Corporation.
# Modifications Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from howefock.core.utils import COMMANDS

name2cmd = COMMANDS


def get_command(args, logger):
    if args.command in COMMANDS:
        return COMMANDS[args.command](args=args, logger=logger)
    else:
        raise KeyError(f"Unknown command: {str(args.command)}")
