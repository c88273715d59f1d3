# Copyright (c) Microsoft Corporation.
# Modifications Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
Command line front end: howe <command> [--m M --n N --p P --q Q --d D] [shape flags] [--format text|json]

Exit codes: 0 on success, 1 on a domain error or a failed check, 2 on a usage error.
"""

import os
import re
import sys
import argparse

from howefock.commands import get_command
from howefock.commands.utils import str2bool
from howefock.core import HoweError
from howefock.core.utils import (
    COMMANDS,
    get_context,
    get_logger,
    import_all_modules_for_register,
    over_write_args_from_file,
)

SHAPE_FLAGS = ("--lambda", "--mu", "--nu")
_PARTS_RE = re.compile(r"^-?\d+(,-?\d+)*$")


def preprocess_argv(argv):
    """
    glue "--lambda -1,-1" into "--lambda=-1,-1" so that negative parts are not read as flags
    """
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in SHAPE_FLAGS and i + 1 < len(argv) and _PARTS_RE.match(argv[i + 1]):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def get_parser():
    parser = argparse.ArgumentParser(prog="howe", description="Fock-space Howe duality of gl_d x gl(m+p|n+q)")
    parser.add_argument("command", nargs="?", default=None, help="one of " + ", ".join(sorted(COMMANDS.keys())))

    """
    Context of the dual pair
    """
    parser.add_argument("--m", type=int, default=0, help="even rank of gl(m|n)")
    parser.add_argument("--n", type=int, default=0, help="odd rank of gl(m|n)")
    parser.add_argument("--p", type=int, default=0, help="even rank of gl(p|q)")
    parser.add_argument("--q", type=int, default=0, help="odd rank of gl(p|q)")
    parser.add_argument("--d", type=int, default=0, help="rank of gl_d")

    """
    Shapes, truncation and bounds
    """
    parser.add_argument("--lambda", type=str, default="", help="(generalized) partition, e.g. 2,1,-1")
    parser.add_argument("--trunc", type=int, default=None, help="truncation degree N of series")
    parser.add_argument("--bound", type=int, default=None, help="enumeration bound of decomposition tables")

    """
    Output, logging and parallelism
    """
    parser.add_argument("--format", type=str, default="text", choices=["text", "json"])
    parser.add_argument("--threads", type=int, default=1, help="worker threads of the library")
    parser.add_argument("--save_dir", type=str, default=None, help="write log.txt under save_dir/save_name")
    parser.add_argument("-sn", "--save_name", type=str, default="howe")
    parser.add_argument("--log_level", type=str, default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--progress", type=str2bool, default=False, help="show a progress bar on stderr")

    # config file
    parser.add_argument("--c", type=str, default="")
    return parser


def _overlay(parser, args):
    try:
        over_write_args_from_file(args, args.c)
    except OSError as error:
        parser.error(f"cannot read config file {args.c}: {error}")


def get_config(argv=None):
    import_all_modules_for_register()
    argv = preprocess_argv(list(sys.argv[1:] if argv is None else argv))
    parser = get_parser()

    # first pass: find the command, possibly from the config file
    args, _ = parser.parse_known_args(argv)
    _overlay(parser, args)
    if args.command is None:
        parser.error("a command is required")
    if args.command not in COMMANDS:
        parser.error(f"unknown command {args.command!r}, choose from {', '.join(sorted(COMMANDS.keys()))}")
    command = args.command

    # add command specific arguments
    for argument in COMMANDS[command].get_argument():
        parser.add_argument(
            argument.name,
            type=argument.type,
            default=argument.default,
            help=argument.help,
            choices=argument.choices,
        )
    args = parser.parse_args(argv)
    _overlay(parser, args)
    if args.command is None:
        args.command = command
    return args


def run(argv=None):
    """
    parse argv, run the command and print its result on stdout; returns the exit code
    """
    try:
        args = get_config(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else 2

    save_path = os.path.join(args.save_dir, args.save_name) if args.save_dir else None
    logger = get_logger(args.save_name, save_path, str(args.log_level).upper())

    try:
        get_context(args)
        command = get_command(args, logger)
        output = command.run()
    except HoweError as error:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"error: {error}", file=sys.stderr)
        return 1

    if output:
        print(output)
    if command.status:
        logger.warning("%s finished with status %d", args.command, command.status)
    return command.status
