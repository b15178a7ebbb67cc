"""Shared test helpers: independent reference implementations.

The helpers here deliberately avoid the package's counting machinery so
they can serve as second opinions: subsequence counts come from explicit
combination enumeration, and motif matching uses bijection search over the
grid templates instead of canonical labelling.
"""

from __future__ import annotations

import math
from itertools import combinations, permutations, product

import numpy as np

from temporal_motifs import CountMatrix, TemporalGraph, build_graph
from temporal_motifs.catalog import GRID_PATTERN


def graph_from_edges(edges, n=None) -> TemporalGraph:
    """Build a graph from (src, dst, t) tuples, preserving line order for ties."""
    if not edges:
        return build_graph(
            np.empty(0, np.int64), np.empty(0, np.int64), np.empty(0, np.int64), n=n or 0
        )
    src, dst, t = (np.asarray(col, dtype=np.int64) for col in zip(*edges))
    return build_graph(src, dst, t, n=n)


def brute_subsequence_counts(events, delta, length, alphabet):
    """Direct enumeration of ordered key subsequences within the window."""
    counts = {p: 0 for p in product(range(alphabet), repeat=length)}
    for combo in combinations(range(len(events)), length):
        t_first = events[combo[0]][1]
        t_last = events[combo[-1]][1]
        if delta != math.inf and t_last - t_first > delta:
            continue
        counts[tuple(events[i][0] for i in combo)] += 1
    return counts


def _matches_template(instance_edges, pattern):
    pattern_labels = sorted({n for e in pattern for n in e})
    instance_nodes = sorted({n for e in instance_edges for n in e})
    if len(pattern_labels) != len(instance_nodes):
        return False
    for perm in permutations(instance_nodes):
        mapping = dict(zip(pattern_labels, perm))
        if all(
            (mapping[a], mapping[b]) == (s, d)
            for (a, b), (s, d) in zip(pattern, instance_edges)
        ):
            return True
    return False


def bijection_oracle(graph: TemporalGraph, delta) -> CountMatrix:
    """Second independent oracle: match every edge triple against all 36
    grid templates by explicit bijection search."""
    matrix = CountMatrix()
    edges = [(int(graph.src[i]), int(graph.dst[i])) for i in range(graph.m)]
    times = graph.t.tolist()
    for i, j, k in combinations(range(graph.m), 3):
        if delta != math.inf and times[k] - times[i] > delta:
            continue
        triple = (edges[i], edges[j], edges[k])
        if len({n for e in triple for n in e}) > 3:
            continue
        hits = [
            cell
            for cell, pattern in GRID_PATTERN.items()
            if _matches_template(triple, pattern)
        ]
        assert len(hits) == 1, f"triple {triple} matched {hits}"
        matrix.add_at(hits[0], 1)
    return matrix
