# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

import pytest

from howefock.combinat.partitions import SkewShape
from howefock.core import SeriesMismatchError, ShapeError
from howefock.symfunc import (
    GradedSeries,
    VariableSet,
    lr_expand,
    schur,
    schur_expand,
    schur_laurent,
    schur_product_expansion,
    skew_schur,
)


def labels(expansion):
    return {la.parts: c for la, c in expansion.items()}


def test_schur_two_variables():
    s = schur((2, 1), VariableSet("x", 2))
    assert s.absolute_terms() == {(2, 1): 1, (1, 2): 1}


def test_schur_vanishes_beyond_depth():
    assert schur((1, 1, 1), VariableSet("x", 2)).is_zero()
    assert schur((), VariableSet("x", 2)) == 1


def test_skew_schur():
    s = skew_schur(SkewShape((2, 1), (1,)), VariableSet("x", 2))
    assert s.absolute_terms() == {(2, 0): 1, (1, 1): 2, (0, 2): 1}


def test_schur_in_three_variables_has_kostka_coefficients():
    s = schur((2, 1), VariableSet("x", 3))
    assert s.coefficient((1, 1, 1)) == 2
    assert s.coefficient((2, 1, 0)) == 1
    assert len(s) == 7


def test_schur_truncation():
    s = schur((2, 1), VariableSet("x", 2), trunc=2)
    assert s.is_zero()
    assert s.trunc == 2


def test_schur_laurent():
    x = VariableSet("x", 2)
    s = schur_laurent((1, -1), x)
    assert s.absolute_terms() == {(1, -1): 1, (0, 0): 1, (-1, 1): 1}
    with pytest.raises(ShapeError):
        schur_laurent((1, -1), VariableSet("x", 3))


def test_schur_expand_laurent():
    x = VariableSet("x", 2)
    assert labels(schur_expand(schur_laurent((1, -1), x), x)) == {(1, -1): 1}
    total = schur_laurent((1, -1), x) + schur_laurent((0, -1), x)
    assert labels(schur_expand(total, x)) == {(1, -1): 1, (0, -1): 1}


def test_schur_expand_truncated():
    x = VariableSet("x", 2)
    assert labels(schur_expand(schur_laurent((1, -1), x, trunc=2), x)) == {(1, -1): 1}
    assert schur_expand(schur_laurent((1, -1), x).truncated(1), x) == {}
    total = schur((2, 1), x, trunc=3) + schur((1,), x, trunc=3)
    assert labels(schur_expand(total, x)) == {(2, 1): 1, (1, 0): 1}


def test_schur_expand_rejects_truncated_laurent_terms():
    x = VariableSet("x", 2)
    without_prefactor = GradedSeries(x.symbols, (True, True), {(1, -1): 1, (0, 0): 1, (-1, 1): 1}, trunc=2)
    with pytest.raises(SeriesMismatchError):
        schur_expand(without_prefactor, x)


def test_schur_expand_product():
    x = VariableSet("x", 3)
    product = schur((2, 1), x) * schur((1,), x)
    assert labels(schur_expand(product, x)) == {(3, 1, 0): 1, (2, 2, 0): 1, (2, 1, 1): 1}


def test_schur_expand_rejects_non_symmetric():
    x = VariableSet("x", 2)
    with pytest.raises(SeriesMismatchError):
        schur_expand(GradedSeries.monomial((x,), {"x1": 1}), x)


def test_schur_expand_rejects_foreign_symbols():
    x = VariableSet("x", 1)
    y = VariableSet("y", 1)
    with pytest.raises(SeriesMismatchError):
        schur_expand(GradedSeries.monomial((x, y), {"y1": 1}), x)


def test_product_expansion_default_length():
    assert labels(schur_product_expansion((1,), (1,))) == {(2,): 1, (1, 1): 1}
    assert labels(schur_product_expansion((2, 1), (2, 1))) == labels(lr_expand((2, 1), (2, 1)))


@pytest.mark.parametrize("mu, nu", [((1,), (1,)), ((2,), (1, 1)), ((2, 1), (1,)), ((3, 1), (2,)), ((2, 2), (1, 1))])
def test_product_expansion_matches_lr(mu, nu):
    assert labels(schur_product_expansion(mu, nu)) == labels(lr_expand(mu, nu))
