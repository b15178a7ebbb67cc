"""Derived metrics, time-scale differencing and the assembled pipeline."""

import math

import pytest

from temporal_motifs import (
    CountMatrix,
    analyze,
    count_motifs,
    gen_random,
    oracle_count,
    timescale_counts,
)
from conftest import graph_from_edges


def test_blocking_only_matrix():
    matrix = CountMatrix()
    matrix[(5, 1)] = 10
    report = analyze(matrix)
    assert report.blocking_fraction == 1.0
    assert report.nonblocking_fraction == 0.0
    assert report.switch_ratio is None
    assert report.cyclic_triangle_fraction is None


def test_zero_matrix_gives_nulls():
    report = analyze(CountMatrix())
    assert report.to_dict() == {
        "blocking_fraction": None,
        "nonblocking_fraction": None,
        "switch_ratio": None,
        "cyclic_triangle_fraction": None,
    }


def test_switch_ratio():
    matrix = CountMatrix()
    matrix[(4, 1)] = 4
    matrix[(4, 3)] = 1
    matrix[(6, 3)] = 1
    assert analyze(matrix).switch_ratio == 2.0


def test_cyclic_fraction():
    matrix = CountMatrix()
    matrix[(2, 4)] = 3
    matrix[(4, 5)] = 9
    assert analyze(matrix).cyclic_triangle_fraction == 0.25


def test_half_blocking_half_nonblocking_synthetic():
    edges = []
    for i in range(5):  # conversations: u->v, v->u, u->v
        u, v = 10 * i, 10 * i + 1
        edges += [(u, v, 100 * i + 1), (v, u, 100 * i + 2), (u, v, 100 * i + 3)]
    for i in range(5):  # fans: u->v, u->w, u->v
        u, v, w = 1000 + 10 * i, 1000 + 10 * i + 1, 1000 + 10 * i + 2
        edges += [(u, v, 5000 + 100 * i + 1), (u, w, 5000 + 100 * i + 2), (u, v, 5000 + 100 * i + 3)]
    g = graph_from_edges(edges)
    matrix = count_motifs(g, math.inf)
    assert matrix == oracle_count(g, math.inf)
    report = analyze(matrix)
    assert report.blocking_fraction == 0.5
    assert report.nonblocking_fraction == 0.5


def test_counts_are_monotone_in_delta():
    for seed in range(5):
        g = gen_random(6, 25, 60, seed=seed)
        low = count_motifs(g, 10)
        high = count_motifs(g, 40)
        assert all(high[cell] >= low[cell] for cell, _ in low.items())


def test_timescale_differencing():
    g = gen_random(6, 30, 200, seed=9)
    intervals = timescale_counts(g, [60, 300])
    assert [iv for iv, _ in intervals] == [(0, 60), (60, 300)]
    direct_60 = count_motifs(g, 60)
    direct_300 = count_motifs(g, 300)
    assert intervals[0][1] == direct_60
    assert intervals[1][1] == direct_300 - direct_60
    assert all(v >= 0 for _, m in intervals for _, v in m.items())


def test_timescale_single_delta():
    g = gen_random(5, 15, 50, seed=3)
    intervals = timescale_counts(g, [25])
    assert len(intervals) == 1
    assert intervals[0][1] == count_motifs(g, 25)


def test_timescale_rejects_non_ascending():
    g = gen_random(4, 8, 20, seed=0)
    with pytest.raises(ValueError):
        timescale_counts(g, [50, 50])
    with pytest.raises(ValueError):
        timescale_counts(g, [])


def test_count_motifs_class_subsets_partition_the_matrix():
    g = gen_random(7, 26, 40, seed=21)
    full = count_motifs(g, 15)
    parts = [count_motifs(g, 15, classes=(c,)) for c in ("pair", "star", "triangle")]
    assert parts[0] + parts[1] + parts[2] == full
    assert count_motifs(g, 15, classes=()) == CountMatrix()
    with pytest.raises(ValueError):
        count_motifs(g, 15, classes=("pair", "wedge"))
    with pytest.raises(ValueError):
        count_motifs(g, 15, algorithm="fastest")


def test_count_motifs_baseline_algorithm_matches_fast():
    g = gen_random(6, 24, 30, seed=13)
    assert count_motifs(g, 12, algorithm="baseline") == count_motifs(g, 12)


def test_count_motifs_worker_count_is_invisible():
    g = gen_random(8, 40, 60, seed=30)
    assert count_motifs(g, 20, workers=1) == count_motifs(g, 20, workers=5)
