"""Windowed ordered-subsequence counting and the two-node motif pipeline.

This is the general engine behind every counting path: stream a key
sequence once, keep live counts of all shorter prefixes inside the moving
time window, and accumulate full-length pattern counts.  Direction bits use
the shared convention OUT = 1 (away from the reference node), IN = 0.
"""

from __future__ import annotations

import math
from itertools import product
from math import comb
from typing import Iterable, Sequence

import numpy as np

from ._kernels import windowed_counts
from ._parallel import parallel_sum
from .catalog import Cell, CountMatrix, classify, grid_index
from .graph import TemporalGraph
from .verification import Instrumentation

# Sentinel for "no window constraint": the int64 maximum.  All kernel
# comparisons are span-based, so this value can never overflow.
DELTA_INF = int(np.iinfo(np.int64).max)

OUT = 1
IN = 0


class CountOverflowError(OverflowError):
    """A counter could exceed the 64-bit range; refusing to wrap around."""


def normalize_delta(delta: int | float) -> int:
    """Validate a window width and map ``math.inf`` to the sentinel."""
    if delta == math.inf:
        return DELTA_INF
    if isinstance(delta, float) and not delta.is_integer():
        raise ValueError(f"delta must be an integer number of seconds: {delta!r}")
    delta = int(delta)
    if delta < 0:
        raise ValueError(f"delta must be >= 0: {delta}")
    return delta


def _guard_counter_range(n_events: int, length: int) -> None:
    # the largest reachable counter is the number of ordered r-subsets
    worst = max((comb(n_events, r) for r in range(1, length + 1)), default=0)
    if worst > np.iinfo(np.int64).max:
        raise CountOverflowError(
            f"{n_events} events with pattern length {length} could overflow "
            "64-bit counters"
        )


def _run_engine(
    keys: np.ndarray,
    times: np.ndarray,
    alphabet: int,
    length: int,
    delta: int,
    instrumentation: Instrumentation | None,
    kind: str,
) -> np.ndarray:
    """Run the kernel and return the full-length count block as a cube."""
    _guard_counter_range(len(keys), length)
    flat = windowed_counts(keys, times, alphabet, length, np.int64(delta))
    if instrumentation is not None:
        instrumentation.record(kind, edges=len(keys))
    final = flat[len(flat) - alphabet**length :]
    return final.reshape((alphabet,) * length)


def count_subsequences(
    events: Iterable[tuple[int, int]],
    delta: int | float,
    length: int,
    alphabet: int | None = None,
) -> dict[tuple[int, ...], int]:
    """Count ordered (possibly non-contiguous) key subsequences within delta.

    ``events`` is a time-sorted iterable of ``(key, timestamp)`` with small
    integer keys.  Returns the count of every length-``length`` key tuple
    whose matching subsequences span at most ``delta`` (inclusive).  Raises
    on unsorted input rather than silently miscounting.
    """
    delta = normalize_delta(delta)
    if length < 1:
        raise ValueError("length must be >= 1")
    ev = list(events)
    keys = np.asarray([e[0] for e in ev], dtype=np.int64)
    times = np.asarray([e[1] for e in ev], dtype=np.int64)
    if len(keys) and (keys.min() < 0):
        raise ValueError("keys must be non-negative")
    if np.any(times[1:] < times[:-1]):
        raise ValueError("events must be sorted by timestamp")
    inferred = int(keys.max()) + 1 if len(keys) else 1
    if alphabet is None:
        alphabet = inferred
    elif alphabet < inferred:
        raise ValueError(f"alphabet {alphabet} too small for keys up to {inferred - 1}")
    cube = _run_engine(keys, times, alphabet, length, delta, None, "sequence")
    return {
        pattern: int(cube[pattern])
        for pattern in product(range(alphabet), repeat=length)
    }


def pair_events(graph: TemporalGraph, u: int, v: int) -> tuple[np.ndarray, np.ndarray]:
    """(keys, times) for the merged edge sequence on {u, v}; key OUT means u->v."""
    idx = graph.pair_edge_indices(u, v)
    keys = (graph.src[idx] == u).astype(np.int64)
    return keys, graph.t[idx]


def count_pair_cube(
    graph: TemporalGraph,
    u: int,
    v: int,
    delta: int,
    length: int = 3,
    instrumentation: Instrumentation | None = None,
) -> np.ndarray:
    """Direction-pattern counts on pair {u, v} as a ``(2,)*length`` cube.

    Index bit OUT (=1) means the edge leaves ``u``.  ``delta`` must already
    be normalized.
    """
    keys, times = pair_events(graph, u, v)
    return _run_engine(keys, times, 2, length, delta, instrumentation, "pair")


def count_pair(
    graph: TemporalGraph, u: int, v: int, delta: int | float, length: int = 3
) -> dict[tuple[int, ...], int]:
    """Pattern counts over the two-letter alphabet {u->v, v->u}.

    Keys are direction tuples relative to ``u`` (OUT = u->v).
    """
    cube = count_pair_cube(graph, u, v, normalize_delta(delta), length)
    return {
        pattern: int(cube[pattern]) for pattern in product((IN, OUT), repeat=length)
    }


def _two_node_cell_table() -> dict[tuple[int, int, int], Cell]:
    table = {}
    for d1, d2, d3 in product((IN, OUT), repeat=3):
        edges = [(0, 1) if d == OUT else (1, 0) for d in (d1, d2, d3)]
        table[(d1, d2, d3)] = grid_index(classify(edges))
    return table


TWO_NODE_CELL = _two_node_cell_table()


def unordered_pairs(graph: TemporalGraph) -> list[tuple[int, int]]:
    """Sorted unordered node pairs carrying at least one temporal edge."""
    return sorted({(u, v) if u < v else (v, u) for u, v in graph.pair_index})


def count_all_2node(
    graph: TemporalGraph,
    delta: int | float,
    workers: int = 1,
    instrumentation: Instrumentation | None = None,
) -> CountMatrix:
    """Counts of the four two-node motif cells over all node pairs."""
    delta = normalize_delta(delta)
    pairs = unordered_pairs(graph)

    def work(chunk: Sequence[tuple[int, int]]) -> tuple[CountMatrix, Instrumentation]:
        matrix = CountMatrix()
        instr = Instrumentation()
        for u, v in chunk:
            cube = count_pair_cube(graph, u, v, delta, 3, instr)
            for pattern, cell in TWO_NODE_CELL.items():
                matrix.add_at(cell, int(cube[pattern]))
        return matrix, instr

    return parallel_sum(pairs, work, workers, instrumentation)
