"""The windowed subsequence engine and the two-node pipeline."""

import math
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from temporal_motifs import (
    IN,
    OUT,
    CountMatrix,
    CountOverflowError,
    count_all_2node,
    count_pair,
    count_subsequences,
    oracle_count,
    gen_random,
    Instrumentation,
)
from temporal_motifs.catalog import PAIR_CELLS
from temporal_motifs.windowed import _guard_counter_range, normalize_delta, DELTA_INF
from conftest import brute_subsequence_counts, graph_from_edges

A, B = 0, 1


def test_spec_example_pairs_wide_window():
    events = [(A, 1), (B, 2), (A, 3), (B, 4)]
    counts = count_subsequences(events, delta=10, length=2)
    assert counts == {(A, A): 1, (A, B): 3, (B, A): 1, (B, B): 1}


def test_spec_example_pairs_tight_window():
    events = [(A, 1), (B, 2), (A, 3), (B, 4)]
    counts = count_subsequences(events, delta=1, length=2)
    assert counts == {(A, A): 0, (A, B): 2, (B, A): 1, (B, B): 0}


def test_window_span_is_inclusive():
    events = [(A, 1), (A, 2), (A, 3)]
    assert count_subsequences(events, delta=2, length=3)[(A, A, A)] == 1


def test_unsorted_input_rejected():
    with pytest.raises(ValueError, match="sorted"):
        count_subsequences([(A, 2), (A, 1)], delta=5, length=2)


def test_bad_arguments():
    with pytest.raises(ValueError):
        count_subsequences([(A, 1)], delta=-1, length=1)
    with pytest.raises(ValueError):
        count_subsequences([(A, 1)], delta=1, length=0)
    with pytest.raises(ValueError):
        count_subsequences([(2, 1)], delta=1, length=1, alphabet=2)


def test_normalize_delta():
    assert normalize_delta(math.inf) == DELTA_INF
    assert normalize_delta(7) == 7
    assert normalize_delta(7.0) == 7
    with pytest.raises(ValueError):
        normalize_delta(1.5)


def test_overflow_guard_refuses_wraparound_range():
    _guard_counter_range(100_000, 3)  # fine
    with pytest.raises(CountOverflowError):
        _guard_counter_range(4_000_000, 3)


events_strategy = st.lists(
    st.tuples(st.integers(0, 2), st.integers(0, 30)), min_size=0, max_size=14
).map(lambda evs: sorted(evs, key=lambda e: e[1]))


@settings(max_examples=150, deadline=None)
@given(events_strategy, st.integers(0, 35), st.integers(1, 3))
def test_matches_brute_force(events, delta, length):
    got = count_subsequences(events, delta, length, alphabet=3)
    assert got == brute_subsequence_counts(events, delta, length, 3)


@settings(max_examples=40, deadline=None)
@given(events_strategy, st.integers(1, 4))
def test_unbounded_window_counts_all_subsequences(events, length):
    got = count_subsequences(events, math.inf, length, alphabet=3)
    assert got == brute_subsequence_counts(events, math.inf, length, 3)
    assert sum(got.values()) == math.comb(len(events), length)


class ReplayCounter:
    """Pure-python window counter that checks prefix consistency at every
    step: each shorter-key counter must equal the true subsequence count of
    the live window.  Used to validate the update discipline itself."""

    def __init__(self, alphabet, length):
        self.alphabet = alphabet
        self.length = length
        self.counts = {}
        for r in range(1, length + 1):
            for key in product(range(alphabet), repeat=r):
                self.counts[key] = 0

    def _increment(self, e):
        for r in range(self.length - 1, 0, -1):
            for prefix in product(range(self.alphabet), repeat=r):
                self.counts[prefix + (e,)] += self.counts[prefix]
        self.counts[(e,)] += 1

    def _decrement(self, e):
        self.counts[(e,)] -= 1
        for r in range(1, self.length - 1):
            for suffix in product(range(self.alphabet), repeat=r):
                self.counts[(e,) + suffix] -= self.counts[suffix]

    def run(self, events, delta):
        start = 0
        for end in range(len(events)):
            while events[start][1] + delta < events[end][1]:
                self._decrement(events[start][0])
                start += 1
            self._increment(events[end][0])
            window = events[start : end + 1]
            for r in range(1, self.length):
                brute = brute_subsequence_counts(window, math.inf, r, self.alphabet)
                for key, value in brute.items():
                    assert self.counts[key] == value, (key, window)
                    assert self.counts[key] >= 0
        return {
            key: v
            for key, v in self.counts.items()
            if len(key) == self.length
        }


@settings(max_examples=30, deadline=None)
@given(events_strategy, st.integers(0, 12))
def test_prefix_counts_track_the_window_exactly(events, delta):
    replay = ReplayCounter(alphabet=3, length=3).run(events, delta)
    assert replay == count_subsequences(events, delta, 3, alphabet=3)


def test_count_pair_single_triple():
    g = graph_from_edges([(4, 9, 1), (9, 4, 2), (4, 9, 3)])
    counts = count_pair(g, 4, 9, delta=2)
    assert counts[(OUT, IN, OUT)] == 1
    assert sum(counts.values()) == 1


def test_count_pair_window_excludes():
    g = graph_from_edges([(0, 1, 1), (0, 1, 5)])
    counts = count_pair(g, 0, 1, delta=2, length=2)
    assert all(v == 0 for v in counts.values())


def test_count_pair_combinatorial_identity():
    edges = [(0, 1, t) for t in range(10)]
    g = graph_from_edges(edges)
    counts = count_pair(g, 0, 1, delta=100)
    assert counts[(OUT, OUT, OUT)] == math.comb(10, 3)
    assert sum(counts.values()) == math.comb(10, 3)


def test_count_all_2node_empty():
    assert count_all_2node(graph_from_edges([]), 10) == CountMatrix()


def test_count_all_2node_single_pair_all_out():
    g = graph_from_edges([(0, 1, 1), (0, 1, 2), (0, 1, 3)])
    matrix = count_all_2node(g, 10)
    assert matrix[(6, 1)] == 1
    assert matrix.total() == 1


def test_count_all_2node_matches_oracle_pair_cells():
    for seed in range(8):
        g = gen_random(6, 20, 40, seed=seed)
        delta = (5, 15, math.inf)[seed % 3]
        expected = oracle_count(g, delta)
        got = count_all_2node(g, delta)
        for cell in PAIR_CELLS:
            assert got[cell] == expected[cell]
        assert got.total() == got.total(PAIR_CELLS)


def test_two_node_counting_touches_each_edge_twice():
    inst = Instrumentation()
    g = gen_random(5, 24, 30, seed=2)
    count_all_2node(g, 10, instrumentation=inst)
    assert inst.events_processed == 2 * g.m
    assert inst.sequences_run == len({(min(u, v), max(u, v)) for u, v in g.pair_index})
