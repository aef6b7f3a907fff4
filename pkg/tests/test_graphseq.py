from __future__ import annotations

import pytest

from treebridges import graphseq

# counts of graphical degree sequences by vertex count
GRAPHICAL_COUNTS = [1, 2, 4, 11, 31, 102, 342, 1213, 4361, 16016]


def test_is_graphical_sequence_basics():
    assert graphseq.is_graphical_sequence((0,))
    assert graphseq.is_graphical_sequence((1, 1))
    assert graphseq.is_graphical_sequence((2, 2, 2))
    assert graphseq.is_graphical_sequence((3, 3, 3, 3))
    assert graphseq.is_graphical_sequence((1, 1, 1, 1))
    assert graphseq.is_graphical_sequence((0, 0, 0, 0))


def test_is_graphical_sequence_rejections():
    # odd total degree can never be realized
    assert not graphseq.is_graphical_sequence((0, 1))
    assert not graphseq.is_graphical_sequence((1, 2, 2))
    # even sum but too top-heavy for the isolated vertices to absorb
    assert not graphseq.is_graphical_sequence((0, 0, 2, 2))
    assert not graphseq.is_graphical_sequence((1, 1, 3, 3))


def test_is_graphical_sequence_validation():
    with pytest.raises(ValueError):
        graphseq.is_graphical_sequence((2, 1))  # not sorted
    with pytest.raises(ValueError):
        graphseq.is_graphical_sequence((1, 3))  # entry exceeds n - 1
    with pytest.raises(ValueError):
        graphseq.is_graphical_sequence((-1, 1))


def test_all_graph_degree_sequences_n3():
    assert graphseq.all_graph_degree_sequences(3) == {
        (0, 0, 0),
        (0, 1, 1),
        (1, 1, 2),
        (2, 2, 2),
    }


def test_all_graph_degree_sequences_members_are_graphical():
    for n in range(1, 6):
        for seq in graphseq.all_graph_degree_sequences(n):
            assert graphseq.is_graphical_sequence(seq)


def test_oracle_cap():
    with pytest.raises(ValueError):
        graphseq.all_graph_degree_sequences(graphseq.ORACLE_CAP + 1)


def test_count_graphical_sequences_frozen_row():
    got = [graphseq.count_graphical_sequences(n) for n in range(1, 11)]
    assert got == GRAPHICAL_COUNTS


def test_count_matches_graph_oracle():
    for n in range(1, 7):
        assert graphseq.count_graphical_sequences(n) == len(
            graphseq.all_graph_degree_sequences(n)
        )


def test_prune_does_not_change_counts():
    for n in range(1, 10):
        assert graphseq._count_by_enumeration(n, prune=True) == graphseq._count_by_enumeration(
            n, prune=False
        )


def test_count_caps_and_validation():
    with pytest.raises(ValueError):
        graphseq.count_graphical_sequences(graphseq.COUNT_CAP + 1)
    with pytest.raises(ValueError):
        graphseq.count_graphical_sequences(0)


def test_ratio_table_shape_and_band():
    rows = graphseq.ratio_table(12)
    assert [r[0] for r in rows] == list(range(1, 13))
    assert rows[11][1] == 222117
    ratios = [r[2] for r in rows]
    # slow drift toward the growth constant: settled into a narrow band
    # and still decreasing over the reachable range
    for n in range(8, 13):
        assert 0.03 < ratios[n - 1] < 0.3
    assert ratios[7] > ratios[8] > ratios[9] > ratios[10] > ratios[11]
