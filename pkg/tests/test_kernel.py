# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

import pytest

from howefock.commands.oracle.checks import CHECKS
from howefock.commands.verify.verify import expected_kernel_dimensions
from howefock.core import HoweContext, InadmissibleError
from howefock.oscillator import box_lambda, certify, joint_hwv_kernel, joint_weight, kernel_dimensions
from howefock.representations import CharacterContext


def test_kernel_dimensions_match_labels(ones):
    assert kernel_dimensions(ones, 2) == {0: 1, 1: 2, 2: 5}
    assert expected_kernel_dimensions(ones, 2) == {0: 1, 1: 2, 2: 5}


def test_kernel_vectors_are_weight_vectors(ones):
    weights = sorted(joint_weight(v) for v in joint_hwv_kernel(ones, 1))
    assert weights == [((0, -1), (-2, 1, 0, 0)), ((1, 0), (-2, 2, 1, 0))]


def test_certify_mixed(ones):
    report = certify((1, -1), ones)
    assert report["nonzero"] and report["annihilated_by_all_raising"]
    assert report["gl_d_weight"] == [1, -1]
    assert report["super_weight"] == [-2, 1, 1, 0]
    assert report["matches_Lambda"]


@pytest.mark.parametrize("la", [(0, 0), (2, 0), (1, 1), (0, -2), (-1, -1), (2, -1)])
def test_certify_admissible_labels(ones, la):
    report = certify(la, ones)
    assert report["annihilated_by_all_raising"] and report["matches_Lambda"]


def test_certify_with_odd_hook():
    ctx = HoweContext(m=1, n=2, p=1, q=2, d=3)
    report = certify((2, 1, -2), ctx)
    assert report["matches_Lambda"]
    assert joint_weight(box_lambda((2, 1, -2), ctx))[0] == (2, 1, -2)


def test_certify_inadmissible(ones):
    with pytest.raises(InadmissibleError):
        certify((2, 2), ones)


def test_howe_check_small():
    ctx = CharacterContext(m=1, n=1, p=1, q=1, d=2, trunc=2)
    result = CHECKS["howe"](ctx, None, 1)
    assert result["passed"], result["first_difference"]
    assert result["checked"] == 8


@pytest.mark.slow
def test_howe_check_deep():
    ctx = CharacterContext(m=1, n=1, p=1, q=1, d=2, trunc=4)
    assert CHECKS["howe"](ctx, None, 1)["passed"]
