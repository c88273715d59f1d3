# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

import pytest

from howefock.core import ContextError, HoweContext, InadmissibleError, ShapeError
from howefock.representations import (
    branch,
    branch_character,
    char_W,
    howe_enumerate,
    tensor_character,
    tensor_completeness_ceiling,
    tensor_decompose,
)


def parts(labels):
    return [la.parts for la in labels]


def table_labels(table):
    out = {}
    for label, mult in table.items():
        key = tuple(part.parts for part in label) if isinstance(label, tuple) else label.parts
        out[key] = mult
    return out


def test_howe_enumerate_polynomial_case():
    assert parts(howe_enumerate(1, 0, 0, 0, 2, 2)) == [(0, 0), (1, 0), (2, 0)]


def test_howe_enumerate_d1():
    assert parts(howe_enumerate(1, 1, 1, 1, 1, 1)) == [(0,), (1,), (-1,)]


def test_howe_enumerate_degree_four():
    labels = [la.parts for la in howe_enumerate(1, 1, 1, 1, 2, 4) if la.abs_size == 4]
    assert labels == [(3, 1), (4, 0), (3, -1), (2, -2), (1, -3), (-1, -3), (0, -4)]


def test_howe_enumerate_rejects_negative_bound():
    with pytest.raises(ContextError):
        howe_enumerate(1, 1, 1, 1, 2, -1)


def test_branch_table():
    ctx = HoweContext(m=2, p=2, d=2)
    table = branch((1, 0), ctx, 2)
    assert table_labels(table) == {
        ((1, 0), (0, 0)): 1,
        ((2, 0), (0, -1)): 1,
        ((1, 1), (0, -1)): 1,
    }
    assert not table.complete
    first = table.to_json()["entries"][0]
    assert first["label"] == [[1, 0], [0, 0]]
    assert first["weight"] == {"gl_m|n": [1, 0], "gl_p|q": [-2, -2]}


def test_branch_without_dual_block_is_complete():
    table = branch((2, 1), HoweContext(m=1, n=1, d=2), 3)
    assert table.complete
    assert table_labels(table) == {((2, 1), (0, 0)): 1}
    assert table.to_text().splitlines()[-1] == "bound 3, complete"


def test_branch_errors(ones):
    with pytest.raises(InadmissibleError):
        branch((2, 2), ones, 3)
    with pytest.raises(ShapeError):
        branch((1,), ones, 3)
    with pytest.raises(ContextError):
        branch((1, 0), ones, -1)


@pytest.mark.parametrize("la", [(0, 0), (1, -1), (2, 0), (0, -1), (1, 1)])
def test_branch_character_matches_char_W(char_ctx, la):
    ctx = char_ctx(trunc=3)
    assert branch_character(branch(la, ctx, ctx.trunc), ctx) == char_W(la, ctx)


def test_tensor_of_boxes(ones):
    table = tensor_decompose((1,), (1,), ones, d_max=2)
    assert table_labels(table) == {(2, 0): 1, (1, 1): 1, (3, -1): 1, (4, -2): 1}
    assert not table.complete
    payload = table.to_json()
    assert [row["label"] for row in payload["entries"]] == [[1, 1], [2, 0], [3, -1], [4, -2]]
    assert payload["bound"] == 2 and payload["complete"] is False


def test_tensor_without_dual_block_is_complete():
    ctx = HoweContext(m=2, d=2)
    table = tensor_decompose((1,), (1,), ctx, d_max=3)
    assert table.complete
    assert table_labels(table) == {(2, 0): 1, (1, 1): 1}
    assert tensor_completeness_ceiling((1,), (1,), ctx) == 0
    assert tensor_completeness_ceiling((1,), (1,), HoweContext(m=1, p=1, d=2)) is None
    assert tensor_completeness_ceiling((-1,), (-2,), HoweContext(p=1, d=2)) == 3


def test_tensor_errors(ones):
    with pytest.raises(ShapeError):
        tensor_decompose((), (), ones, d_max=1)
    with pytest.raises(ContextError):
        tensor_decompose((1,), (1,), ones)
    with pytest.raises(InadmissibleError):
        tensor_decompose((2, 2), (1,), ones, d_max=1)


def test_tensor_character(char_ctx):
    ctx = char_ctx(trunc=2)
    left = char_W((1,), ctx.with_d(1)) * char_W((1,), ctx.with_d(1))
    right = tensor_character(tensor_decompose((1,), (1,), ctx), ctx, 2)
    assert left.first_difference(right) is None


@pytest.mark.slow
def test_tensor_character_mixed(char_ctx):
    ctx = char_ctx(trunc=4)
    left = char_W((1,), ctx.with_d(1)) * char_W((-1,), ctx.with_d(1))
    right = tensor_character(tensor_decompose((1,), (-1,), ctx), ctx, 2)
    assert left == right
