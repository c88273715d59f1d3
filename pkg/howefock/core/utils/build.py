# Copyright (c) Microsoft Corporation.
# Modifications Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

import os
import logging

from howefock.core.context import HoweContext
from howefock.core.exceptions import ContextError


def get_logger(name, save_path=None, level="INFO"):
    """
    create logger function
    """
    logger = logging.getLogger(name)
    logging.basicConfig(format="[%(asctime)s %(levelname)s] %(message)s", level=getattr(logging, level))
    logger.setLevel(getattr(logging, level))

    log_file = os.path.abspath(os.path.join(save_path, "log.txt")) if save_path is not None else None
    # one log.txt handler per logger, however often get_logger runs
    for handler in list(logger.handlers):
        if isinstance(handler, logging.FileHandler):
            if handler.baseFilename == log_file:
                return logger
            logger.removeHandler(handler)
            handler.close()

    if log_file is not None:
        os.makedirs(save_path, exist_ok=True)
        log_format = logging.Formatter("[%(asctime)s %(levelname)s] %(message)s")
        fileHandler = logging.FileHandler(log_file)
        fileHandler.setFormatter(log_format)
        logger.addHandler(fileHandler)

    return logger


def get_context(args, context_cls=HoweContext, **extra):
    """
    build the (m, n, p, q, d) context of a command from parsed arguments

    Args
        args: argparse arguments holding m, n, p, q and d
        context_cls: HoweContext or a subclass such as CharacterContext
        extra: additional fields for context_cls (e.g. trunc)
    """
    values = {key: getattr(args, key) for key in ("m", "n", "p", "q", "d")}
    for key, value in values.items():
        if value is None:
            raise ContextError(f"--{key} is required")
    try:
        return context_cls(**values, **extra)
    except TypeError as error:
        raise ContextError(str(error)) from error
