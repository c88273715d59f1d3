# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

import sys

from howefock.cli import run

if __name__ == "__main__":
    sys.exit(run())
