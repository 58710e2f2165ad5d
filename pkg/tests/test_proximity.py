import json
import random
from fractions import Fraction

import pytest

from germdyn.proximity import (
    ExceptionalLattice,
    NotNegativeDefinite,
    ProximityChart,
    intersection_matrix,
    random_chart,
    skewness,
)


def test_chart_validation():
    with pytest.raises(ValueError):
        ProximityChart(3, [(3, 2)])  # point 2 not proximate to point 1
    with pytest.raises(ValueError):
        ProximityChart(2, [(2, 1)], axis="z")
    ProximityChart(3, [(2, 1), (3, 2), (3, 1)])  # satellite: fine


def test_two_point_chain_frozen_values():
    chart = ProximityChart.free_chain(2)
    lat = intersection_matrix(chart)
    assert lat.N == [[-2, 1], [1, -1]]
    assert lat.b == [1, 1]
    # dual coefficients: N^{-1} = [[-1, -1], [-1, -2]]
    assert lat.dual == [
        [Fraction(-1), Fraction(-1)],
        [Fraction(-1), Fraction(-2)],
    ]
    assert skewness(chart, 2, 2) == 2
    assert skewness(chart, 1, 2) == 1
    assert skewness(chart, 1, 1) == 1


def test_three_point_chain():
    chart = ProximityChart.free_chain(3)
    lat = intersection_matrix(chart)
    assert lat.b == [1, 1, 1]
    assert skewness(chart, 3, 3) == 3
    assert skewness(chart, 1, 3) == 1


def test_satellite_chart():
    chart = ProximityChart(3, [(2, 1), (3, 2), (3, 1)])
    lat = intersection_matrix(chart)
    # third point lies on both earlier divisors: generic multiplicity 2
    assert lat.b == [1, 1, 2]
    # hand inversion: N^{-1} = -P^{-1} P^{-T} has (3,3) entry -6
    assert skewness(chart, 3, 3) == Fraction(3, 2)


def test_orders_follow_axis():
    chart = ProximityChart.free_chain(3, axis="y")
    lat = intersection_matrix(chart)
    # y = 0 follows the whole free chain, x = 0 only the first point
    assert lat.ord_y == [1, 2, 3]
    assert lat.ord_x == [1, 1, 1]
    flipped = ProximityChart.free_chain(3, axis="x")
    lat2 = intersection_matrix(flipped)
    assert lat2.ord_x == [1, 2, 3] and lat2.ord_y == [1, 1, 1]


def test_negative_definite_sweep():
    rng = random.Random(880)
    for _ in range(200):
        chart = random_chart(rng)
        lat = intersection_matrix(chart)  # raises if not negative definite
        r = chart.r
        assert all(lat.N[i][j] == lat.N[j][i] for i in range(r) for j in range(r))
        assert all(b >= 1 for b in lat.b)


def test_not_negative_definite_detection():
    from germdyn.proximity import _check_negative_definite

    with pytest.raises(NotNegativeDefinite):
        _check_negative_definite([[1, 0], [0, -1]])
    with pytest.raises(NotNegativeDefinite):
        _check_negative_definite([[-1, 2], [2, -1]])


def test_json_round_trip():
    chart = ProximityChart(3, [(2, 1), (3, 2), (3, 1)], axis="x")
    text = json.dumps(chart.to_json())
    back = ProximityChart.from_json(text)
    assert back.r == chart.r
    assert back.proximities == chart.proximities
    assert back.axis == "x"
