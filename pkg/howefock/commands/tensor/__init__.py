# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from .tensor import TensorCommand
