# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

from .hook import Hook
from .logging import LoggingHook
from .priority import Priority, get_priority
from .timer import TimerHook
