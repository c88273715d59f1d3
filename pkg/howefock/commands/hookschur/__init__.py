# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from .hookschur import HookSchurCommand
