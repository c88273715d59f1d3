# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from itertools import product

import numpy as np
import pytest

from howefock.combinat.partitions import (
    GeneralizedPartition,
    Partition,
    SkewShape,
    angle,
    check_admissible,
    contains,
    depth,
    generalized_partitions,
    parse_parts,
    partitions_of,
    partitions_up_to,
    sort_key,
    split_plus_minus,
    star,
    transpose,
)
from howefock.core import ShapeError


def parts(items):
    return [la.parts for la in items]


def test_parse_parts():
    la = parse_parts("2,1,-1")
    assert la.parts == (2, 1, -1)
    assert not isinstance(la, Partition)
    assert isinstance(parse_parts("2, 1"), Partition)
    assert parse_parts("").parts == ()


@pytest.mark.parametrize("text", ["1,2", "a", "2,,1", "2;1"])
def test_parse_parts_rejects(text):
    with pytest.raises(ShapeError):
        parse_parts(text)


def test_partition_rejects_negative_parts():
    with pytest.raises(ShapeError):
        Partition((1, -1))


def test_declared_length_is_significant():
    assert Partition((2, 1)) != Partition((2, 1, 0))
    assert Partition((2, 1, 0)).trim() == Partition((2, 1))
    assert Partition((2, 1)).pad(4).parts == (2, 1, 0, 0)


def test_part_is_one_based():
    la = GeneralizedPartition((3, 0, -2))
    assert la.part(1) == 3
    assert la.part(3) == -2
    with pytest.raises(ShapeError):
        la.part(0)
    with pytest.raises(ShapeError):
        la.part(4)


def test_sizes_and_shift():
    la = GeneralizedPartition((2, 0, -1))
    assert la.size == 1
    assert la.abs_size == 3
    shifted = GeneralizedPartition((1, -1)).shift(1)
    assert shifted.parts == (2, 0)
    assert isinstance(shifted, Partition)


def test_angle():
    assert angle(3) == 3
    assert angle(0) == 0
    assert angle(-2) == 0


def test_transpose():
    assert transpose((3, 1)).parts == (2, 1, 1)
    assert transpose((2, 2, 0)).parts == (2, 2)
    assert transpose(()).parts == ()
    assert transpose(transpose((4, 2, 1))).parts == (4, 2, 1)


def test_star_and_split():
    assert star((2, 0, -1)).parts == (1, 0, -2)
    plus, minus = split_plus_minus((2, 0, -1))
    assert plus.parts == (2, 0, 0)
    assert minus.parts == (0, 0, -1)
    assert depth((2, 1, 0, -1)) == 2


@pytest.mark.parametrize(
    "la, sizes, expected",
    [
        ((0, 0, -2), (1, 1, 1, 1), True),
        ((2, 2), (1, 1, 0, 0), False),
        ((1, -2), (1, 1, 1, 1), True),
        ((-1, -2), (0, 0, 1, 1), True),
        ((-2, -2), (0, 0, 1, 1), False),
        ((5, 5), (2, 0, 0, 0), True),
        ((-3,), (0, 0, 1, 0), True),
    ],
)
def test_check_admissible(la, sizes, expected):
    assert check_admissible(la, *sizes) is expected


def test_check_admissible_needs_length():
    with pytest.raises(ShapeError):
        check_admissible((), 1, 1, 1, 1)


def test_contains_and_skew_shape():
    assert contains((3, 2), (2, 2))
    assert contains((3, 2), (1,))
    assert not contains((3, 1), (2, 2))
    assert SkewShape((2, 1), (1,)).size == 2
    with pytest.raises(ShapeError):
        SkewShape((3, 1), (2, 2))


def test_partitions_of():
    assert parts(partitions_of(4, 2)) == [(4, 0), (3, 1), (2, 2)]
    assert parts(partitions_of(3, 3, pad=False)) == [(3,), (2, 1), (1, 1, 1)]
    assert parts(partitions_of(3, 3, max_part=2, pad=False)) == [(2, 1), (1, 1, 1)]
    assert parts(partitions_of(0, 2)) == [(0, 0)]
    assert list(partitions_of(-1, 2)) == []


def test_partitions_up_to():
    assert parts(partitions_up_to(2, 2)) == [(0, 0), (1, 0), (2, 0), (1, 1)]


def test_generalized_partitions():
    found = set(parts(generalized_partitions(2, 1)))
    assert found == {(1, 0), (0, 0), (0, -1)}
    assert all(sum(abs(v) for v in la) <= 2 for la in parts(generalized_partitions(3, 2)))
    assert parts(generalized_partitions(0, 3)) == [()]


def test_sort_key_is_graded():
    labels = [(0, -1), (1, 0), (2, 0), (1, 1), (0, 0)]
    assert sorted(labels, key=sort_key) == [(0, 0), (1, 0), (0, -1), (1, 1), (2, 0)]


def random_generalized(rng, d, low=-6, high=6):
    return GeneralizedPartition(tuple(sorted(rng.integers(low, high + 1, size=d).tolist(), reverse=True)))


@pytest.mark.parametrize("size", range(0, 13))
def test_transpose_is_an_involution(size):
    for la in partitions_of(size, size, pad=False):
        assert transpose(transpose(la)) == la


def test_star_is_an_involution():
    rng = np.random.default_rng(0)
    for _ in range(1000):
        la = random_generalized(rng, int(rng.integers(0, 7)))
        assert star(la).length == la.length
        assert star(star(la)).parts == la.parts


def test_split_plus_minus_random():
    rng = np.random.default_rng(1)
    for _ in range(500):
        d = int(rng.integers(1, 7))
        la = random_generalized(rng, d)
        plus, minus = split_plus_minus(la)
        assert plus.length == minus.length == d
        assert tuple(a + b for a, b in zip(plus, minus)) == la.parts
        assert depth(plus) + depth(star(minus)) <= d


def _hook_holds(la, m, n):
    return m >= la.length or la.part(m + 1) <= n


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_check_admissible_splits_into_both_blocks(d):
    for la in generalized_partitions(d, 5):
        plus, minus = split_plus_minus(la)
        for m, n, p, q in product(range(3), repeat=4):
            expected = _hook_holds(plus, m, n) and _hook_holds(star(minus), p, q)
            assert check_admissible(la, m, n, p, q) is expected, (la, m, n, p, q)
