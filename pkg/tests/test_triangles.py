"""Triangle counting: assignment, pair sweep, baseline and oracle equality."""

import math

import numpy as np
import pytest

from temporal_motifs import (
    CountMatrix,
    Instrumentation,
    assign_triangles,
    classify,
    count_all_triangles_baseline,
    count_all_triangles_fast,
    count_triangles_pair,
    enumerate_triangles,
    gen_random,
    gen_worstcase,
    grid_index,
    grid_motif,
    oracle_count,
    static_projection,
)
from temporal_motifs.catalog import TRIANGLE_CELLS
from temporal_motifs.triangles import TRIANGLE_CELL
from conftest import graph_from_edges


def _assignment(graph):
    static = static_projection(graph)
    return static, assign_triangles(static, enumerate_triangles(static))


def test_assignment_picks_max_multiplicity_pair():
    edges = [(0, 1, t) for t in range(5)]  # sigma(0,1) = 5
    edges += [(0, 2, 10), (2, 0, 11)]      # sigma(0,2) = 2
    edges += [(1, 2, 12)]                  # sigma(1,2) = 1
    g = graph_from_edges(edges)
    _, assignment = _assignment(g)
    assert assignment.pair_wings == {(0, 1): [2]}


def test_assignment_tie_breaks_to_smallest_pair():
    g = graph_from_edges([(0, 1, 1), (1, 2, 2), (2, 0, 3)])
    _, assignment = _assignment(g)
    assert assignment.pair_wings == {(0, 1): [2]}


def test_assignment_covers_every_triangle_once():
    for seed in range(5):
        g = gen_random(10, 60, 40, seed=seed)
        static, assignment = _assignment(g)
        tau = len(enumerate_triangles(static))
        assert assignment.total == tau
        assert sum(len(w) for w in assignment.pair_wings.values()) == tau


def test_worstcase_assigns_all_triangles_to_the_heavy_pair():
    g = gen_worstcase(4, 20)  # sigma(u, v) = 12 > 1
    _, assignment = _assignment(g)
    assert set(assignment.pair_wings) == {(0, 1)}
    assert sorted(assignment.pair_wings[(0, 1)]) == [2, 3, 4, 5]


def test_pair_events_single_instance():
    u, v, w = 7, 8, 9
    events = [(w, 0, 0, 1), (w, 0, 1, 2), (v, 1, 0, 3)]  # w->u, w->v, u->v
    cube = count_triangles_pair(events, u, v, delta=10)
    assert cube[(1, 1, 0)] == 1  # the cell-(4,5) orientation key
    assert cube.sum() == 1
    assert count_triangles_pair(events, u, v, delta=1).sum() == 0


def test_pair_events_wings_only_count_nothing():
    u, v, w = 0, 1, 2
    events = [(w, 0, 0, 1), (w, 0, 1, 2), (w, 1, 0, 3), (w, 1, 1, 4)]
    assert count_triangles_pair(events, u, v, delta=100).sum() == 0


def test_pair_events_two_wings_with_tied_timestamps():
    u, v = 0, 1
    events = [
        (2, 0, 0, 1),  # w1 -> u
        (3, 0, 0, 1),  # w2 -> u
        (2, 0, 1, 2),  # w1 -> v
        (3, 0, 1, 2),  # w2 -> v
        (v, 1, 0, 3),  # u -> v
    ]
    cube = count_triangles_pair(events, u, v, delta=10)
    assert cube[(1, 1, 0)] == 2
    assert cube.sum() == 2


def test_orientation_keys_match_the_catalog():
    # build one 3-edge instance per triangle cell and check it lands there
    for bits, cell in TRIANGLE_CELL.items():
        pattern = grid_motif(*cell).pattern
        g = graph_from_edges([(a, b, t + 1) for t, (a, b) in enumerate(pattern)])
        matrix = count_all_triangles_fast(g, math.inf)
        assert matrix[cell] == 1 and matrix.total() == 1, (bits, cell)


def test_triangle_free_graph_counts_zero():
    g = graph_from_edges([(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 0, 4)])
    assert count_all_triangles_fast(g, math.inf) == CountMatrix()
    assert count_all_triangles_baseline(g, math.inf) == CountMatrix()


def test_worstcase_small_counts():
    g = gen_worstcase(2, 6)
    matrix = count_all_triangles_fast(g, math.inf)
    assert matrix[(4, 5)] == 4
    assert matrix.total() == 4


def test_cyclic_triangle_lands_in_a_cyclic_cell():
    g = graph_from_edges([(0, 1, 1), (1, 2, 2), (2, 0, 3)])
    cell = grid_index(classify([(0, 1), (1, 2), (2, 0)]))
    assert cell == (2, 4)
    for counter in (count_all_triangles_fast, count_all_triangles_baseline):
        matrix = counter(g, math.inf)
        assert matrix[cell] == 1 and matrix.total() == 1


@pytest.mark.parametrize("seed", range(10))
def test_fast_equals_baseline_equals_oracle(seed):
    n = 4 + seed % 5
    m = 15 + seed * 2
    delta = (7, 30, math.inf)[seed % 3]
    g = gen_random(n, m, 60, seed=500 + seed)
    fast = count_all_triangles_fast(g, delta)
    baseline = count_all_triangles_baseline(g, delta)
    assert fast == baseline
    expected = oracle_count(g, delta)
    for cell in TRIANGLE_CELLS:
        assert fast[cell] == expected[cell], (cell, seed)
    assert fast.total() == fast.total(TRIANGLE_CELLS)


def test_baseline_reprocesses_the_heavy_pair_per_triangle():
    n, m = 5, 60
    g = gen_worstcase(n, m)
    inst = Instrumentation()
    count_all_triangles_baseline(g, math.inf, instrumentation=inst)
    # every triangle rereads the m-2n pair edges plus its two wing edges
    assert inst.edges("triangle_baseline") == n * (m - 2 * n + 2)
    assert inst.runs("triangle_baseline") == n


def test_complexity_witness_ratio_grows_linearly():
    m = 200
    ratios = []
    for n in (2, 4, 8):
        g = gen_worstcase(n, m)
        inst_fast, inst_base = Instrumentation(), Instrumentation()
        fast = count_all_triangles_fast(g, math.inf, instrumentation=inst_fast)
        base = count_all_triangles_baseline(g, math.inf, instrumentation=inst_base)
        assert fast == base
        ratios.append(inst_base.events_processed / inst_fast.events_processed)
    assert ratios == sorted(ratios)
    for n, ratio in zip((2, 4, 8), ratios):
        assert ratio >= n / 2


def test_workers_do_not_change_results():
    g = gen_random(9, 50, 40, seed=17)
    assert count_all_triangles_fast(g, 15, workers=1) == count_all_triangles_fast(
        g, 15, workers=4
    )
    assert count_all_triangles_baseline(
        g, 15, workers=1
    ) == count_all_triangles_baseline(g, 15, workers=3)
