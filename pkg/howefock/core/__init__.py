# Copyright (c) Microsoft Corporation.
# Modifications Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from .commandbase import CommandBase
from .context import HoweContext
from .exceptions import (
    ContextError,
    HoweError,
    InadmissibleError,
    OracleFailure,
    SeriesMismatchError,
    ShapeError,
    TruncationMismatchError,
)
