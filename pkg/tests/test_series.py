from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treebridges import bridges, series, trees

IRREDUCIBLE_ROW = [0, 2, 0, 0, 1, 2, 8, 20, 66, 200, 644]


def test_log_transform_requires_unit_head():
    with pytest.raises(ValueError):
        series.log_transform([2, 1])
    with pytest.raises(ValueError):
        series.log_transform([])


def test_log_transform_of_geometric_sequence():
    # a_n = c^n transforms to the constant-ratio sequence c, c^2, ...
    for c in (1, 2, 5):
        a = [c**n for n in range(12)]
        assert series.log_transform(a) == a[1:]


def test_log_transform_of_bridge_counts_doubles_tree_counts():
    b = list(bridges.graphical_bridge_counts(30))
    doubled = [2 * trees.plane_tree_count(n) for n in range(1, 31)]
    assert series.log_transform(b) == doubled


@given(st.lists(st.integers(-6, 6), min_size=0, max_size=12))
def test_log_transform_round_trip(tail):
    a = [1] + [Fraction(x) for x in tail]
    star = series.log_transform(a)
    assert series.inverse_log_transform(star) == a


def test_irreducible_bridge_counts_frozen_row():
    b = list(bridges.graphical_bridge_counts(10))
    assert series.irreducible_bridge_counts(b) == IRREDUCIBLE_ROW


def test_irreducible_counts_nonnegative_far_out():
    b = list(bridges.graphical_bridge_counts(60))
    assert all(i >= 0 for i in series.irreducible_bridge_counts(b))


def test_renewal_recurrence():
    # b_n = sum_k i_k b_{n-k}: every bridge is a first irreducible part
    # followed by a shorter graphical bridge
    b = list(bridges.graphical_bridge_counts(40))
    irr = series.irreducible_bridge_counts(b)
    for n in range(1, 41):
        assert b[n] == sum(irr[k] * b[n - k] for k in range(1, n + 1))


def test_parts_count_distribution_is_a_distribution():
    for n in range(1, 26):
        dist = series.parts_count_distribution(n)
        assert sum(dist.values(), Fraction(0)) == 1
        assert all(1 <= m <= n for m in dist)
        assert all(p > 0 for p in dist.values())


def test_parts_count_distribution_extremes():
    b = list(bridges.graphical_bridge_counts(12))
    irr = series.irreducible_bridge_counts(b)
    for n in (4, 7, 12):
        dist = series.parts_count_distribution(n)
        # n parts forces n minimal parts, each chosen 2 ways
        assert dist[n] == Fraction(2**n, b[n])
        assert dist[1] == Fraction(irr[n], b[n])


def test_parts_count_distribution_rejects_nonpositive():
    with pytest.raises(ValueError):
        series.parts_count_distribution(0)


def test_mean_inverse_parts_identity():
    b = bridges.graphical_bridge_counts(20)
    for n in range(1, 21):
        assert series.mean_inverse_parts(n) * n * b[n] == 2 * trees.plane_tree_count(n)


def test_mean_inverse_parts_small_values():
    assert series.mean_inverse_parts(1) == 1
    assert series.mean_inverse_parts(2) == Fraction(1, 2)
    assert series.mean_inverse_parts(4) == Fraction(5, 17)


def test_convergence_table_shape_and_trend():
    rows = series.convergence_table(40)
    assert len(rows) == 40
    b = bridges.graphical_bridge_counts(40)
    n, ratio, as_float, delta = rows[9]
    assert n == 10
    assert ratio == Fraction(2 * trees.plane_tree_count(10), 10 * b[10])
    assert as_float == pytest.approx(float(ratio))
    # the drift toward the limit is slow but visible
    assert rows[39][3] < rows[9][3] / 2


def test_parts_negbin_tv_distance_range_and_trend():
    d10 = series.parts_negbin_tv_distance(10)
    d40 = series.parts_negbin_tv_distance(40)
    assert 0.0 <= d40 < d10 <= 1.0


def test_regular_variation_ratio_drifts_to_one():
    r10 = series.regular_variation_ratio(10)
    r100 = series.regular_variation_ratio(100)
    assert abs(r10 - 1) < 0.01
    assert abs(r100 - 1) < abs(r10 - 1)
    with pytest.raises(ValueError):
        series.regular_variation_ratio(0)
