# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

import pytest

from howefock.core import HoweContext
from howefock.representations import CharacterContext


@pytest.fixture
def ones():
    """(m, n, p, q, d) = (1, 1, 1, 1, 2)"""
    return HoweContext(m=1, n=1, p=1, q=1, d=2)


@pytest.fixture
def ones_d1():
    return HoweContext(m=1, n=1, p=1, q=1, d=1)


@pytest.fixture
def char_ctx():
    def build(m=1, n=1, p=1, q=1, d=2, trunc=3):
        return CharacterContext(m=m, n=n, p=p, q=q, d=d, trunc=trunc)

    return build
