# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

import pytest

from howefock.core import SeriesMismatchError, ShapeError, TruncationMismatchError
from howefock.symfunc import GradedSeries, VariableSet, alphabet


@pytest.fixture
def x():
    return VariableSet("x", 2)


def test_variable_set(x):
    assert x.symbols == ("x1", "x2")
    assert x.inverse().monomial((1, 2)) == {"x1": -1, "x2": -2}
    assert not x.ungraded().graded
    with pytest.raises(ShapeError):
        VariableSet("x", -1)


def test_alphabet_rejects_grading_conflict(x):
    assert alphabet(x, VariableSet("y", 1)) == (("x1", "x2", "y1"), (True, True, True))
    with pytest.raises(SeriesMismatchError):
        alphabet(x, x.ungraded())


def test_geometric_series(x):
    series = GradedSeries.geometric((x,), {"x1": 1}, 3)
    assert len(series) == 4
    assert series.to_text() == "1 + x1 + x1^2 + x1^3 + O(deg 4)"


def test_geometric_series_needs_truncation(x):
    with pytest.raises(TruncationMismatchError):
        GradedSeries.geometric((x,), {"x1": 1}, None)


def test_product_respects_truncation(x):
    a = GradedSeries.geometric((x,), {"x1": 1}, 2)
    b = GradedSeries.geometric((x,), {"x2": 1}, 2)
    product = a * b
    assert product.trunc == 2
    assert len(product) == 6
    assert product.coefficient((1, 1)) == 1
    assert product.coefficient((2, 1)) == 0


def test_binomial_square(x):
    one_plus = GradedSeries.binomial((x,), {"x1": 1})
    square = one_plus**2
    assert square.coefficient((1, 0)) == 2
    assert square.coefficient({"x1": 2}) == 1


def test_mixing_truncations_raises(x):
    a = GradedSeries.one(x, trunc=2)
    b = GradedSeries.one(x, trunc=3)
    with pytest.raises(TruncationMismatchError):
        a + b
    with pytest.raises(TruncationMismatchError):
        a == b
    with pytest.raises(TruncationMismatchError):
        b.truncated(2).truncated(3)


def test_integer_arithmetic(x):
    one = GradedSeries.one(x)
    assert one + 1 == 2
    assert sum([one, one, one]) == 3
    assert (one * 0).is_zero()
    assert one - one == 0


def test_prefactor_is_outside_the_grading(x):
    series = GradedSeries.monomial((x,), {"x1": 1}, trunc=1).with_prefactor({"x1": -3, "x2": 2})
    assert series.shift == (-3, 2)
    assert series.coefficient((-2, 2)) == 1
    assert series.degree_of_absolute((-2, 2)) == 1
    with pytest.raises(SeriesMismatchError):
        series + GradedSeries.one(x, trunc=1)


def test_ungraded_prefactor_is_folded(x):
    y = VariableSet("y", 1, graded=False)
    series = GradedSeries.one(x, y).with_prefactor({"y1": 2})
    assert series.shift == (0, 0, 0)
    assert series.coefficient((0, 0, 2)) == 1


def test_alignment_of_different_alphabets(x):
    a = GradedSeries.monomial((x,), {"x1": 1})
    b = GradedSeries.monomial((VariableSet("y", 1),), {"y1": 1})
    product = a * b
    assert product.symbols == ("x1", "x2", "y1")
    assert product.coefficient({"x1": 1, "y1": 1}) == 1
    assert product.reordered(("y1", "x1", "x2")).coefficient((1, 1, 0)) == 1


def test_first_difference(x):
    a = GradedSeries.geometric((x,), {"x1": 1}, 3)
    b = GradedSeries.geometric((x,), {"x1": 1}, 3) + GradedSeries.monomial((x,), {"x1": 2}, coef=4, trunc=3)
    assert a.first_difference(a) is None
    assert a.first_difference(b) == {"monomial": "x1^2", "left": 1, "right": 5}


def test_leading_exponent(x):
    series = GradedSeries.monomial((x,), {"x2": 3}) + GradedSeries.monomial((x,), {"x1": 1})
    assert series.leading_exponent() == (1, 0)
    assert series.leading_exponent(("x2", "x1")) == (3, 0)
    assert GradedSeries.zero(x).leading_exponent() is None


def test_json_round_trip_keeps_shift(x):
    series = GradedSeries.geometric((x,), {"x1": 1, "x2": 1}, 4).with_prefactor({"x2": -1})
    payload = series.to_json()
    assert payload["trunc"] == 4
    assert payload["shift"] == [0, -1]
    assert payload["terms"][0] == {"exp": [0, -1], "coef": "1"}
    assert GradedSeries.from_json(payload) == series


def test_truncated_product_rejects_mixed_signs(x):
    up = GradedSeries.monomial((x,), {"x1": 1}, trunc=2)
    down = GradedSeries.monomial((x,), {"x1": -1}, trunc=2)
    with pytest.raises(SeriesMismatchError):
        up * down
    with pytest.raises(SeriesMismatchError):
        (up + down) * GradedSeries.one(x, trunc=2)
    assert (down * down).coefficient((-2, 0)) == 1
    exact = GradedSeries.monomial((x,), {"x1": 1}) + GradedSeries.monomial((x,), {"x1": -1})
    assert (exact * exact).coefficient((0, 0)) == 2
