"""Counting the 24 three-node star motifs.

The fast path visits each node once as the center and counts all star
instances in a single sweep over its incident edges, then cancels the
spurious contributions where all three edges touch the same neighbour by
subtracting per-pair pattern counts.  The baseline path runs the general
window counter once per unordered neighbour pair of each center; it is
quadratic in degree and exists to cross-validate the fast path.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

import numpy as np

from ._kernels import star_baseline_center, star_center_counts
from ._parallel import parallel_sum
from .catalog import Cell, CountMatrix, classify, grid_index
from .graph import TemporalGraph
from .verification import Instrumentation
from .windowed import IN, OUT, count_pair_cube, normalize_delta

CLASSES = ("pre", "post", "mid")

# Positions of the lone-neighbour edge per class: last, first, middle.
_CLASS_SLOTS = {
    "pre": (0, 0, 1),
    "post": (1, 0, 0),
    "mid": (0, 1, 0),
}


def _exemplar_cell(slots: tuple[int, int, int], dirs: tuple[int, int, int]) -> Cell:
    # center 0, paired neighbour 1, lone neighbour 2
    edges = []
    for slot, d in zip(slots, dirs):
        nbr = 2 if slot else 1
        edges.append((0, nbr) if d == OUT else (nbr, 0))
    return grid_index(classify(edges))


def _class_cell_tables() -> dict[str, dict[tuple[int, int, int], Cell]]:
    tables: dict[str, dict[tuple[int, int, int], Cell]] = {}
    for cls, slots in _CLASS_SLOTS.items():
        tables[cls] = {
            dirs: _exemplar_cell(slots, dirs)
            for dirs in product((IN, OUT), repeat=3)
        }
    return tables


# (class, direction triple) -> grid cell; a bijection onto the 24 star cells.
STAR_CLASS_CELL = _class_cell_tables()


def _baseline_pattern_cells() -> np.ndarray:
    """Letter-triple -> flat cell id for the 4-letter (slot*2 + dir) alphabet.

    Patterns that do not use both neighbour slots get -1: their triples sit
    on a single pair and belong to the two-node pipeline.
    """
    table = np.full(64, -1, dtype=np.int64)
    for l1, l2, l3 in product(range(4), repeat=3):
        slots = (l1 // 2, l2 // 2, l3 // 2)
        if len(set(slots)) != 2:
            continue
        edges = []
        for letter in (l1, l2, l3):
            nbr = 1 + letter // 2
            edges.append((0, nbr) if letter % 2 == OUT else (nbr, 0))
        i, j = grid_index(classify(edges))
        table[(l1 * 4 + l2) * 4 + l3] = (i - 1) * 6 + (j - 1)
    return table


_BASELINE_CELL = _baseline_pattern_cells()


def center_events(
    graph: TemporalGraph, u: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(nbr, dir, t) arrays for all edges incident to u, time-sorted."""
    idx = graph.node_index[u]
    outgoing = graph.src[idx] == u
    nbrs = np.where(outgoing, graph.dst[idx], graph.src[idx])
    dirs = outgoing.astype(np.int64)
    return nbrs, dirs, graph.t[idx]


def count_stars_center(
    events: Iterable[tuple[int, int, int]], delta: int | float
) -> dict[str, np.ndarray]:
    """Raw per-class star counts for one center from (nbr, dir, t) events.

    ``dir`` is OUT (=1) for edges leaving the center.  Events must be
    time-sorted; counts include same-neighbour triples (the caller
    subtracts pair patterns to remove them).
    """
    ev = list(events)
    nbrs = np.asarray([e[0] for e in ev], dtype=np.int64)
    dirs = np.asarray([e[1] for e in ev], dtype=np.int64)
    times = np.asarray([e[2] for e in ev], dtype=np.int64)
    if np.any(times[1:] < times[:-1]):
        raise ValueError("events must be sorted by timestamp")
    delta = normalize_delta(delta)
    if len(ev) == 0:
        zero = np.zeros((2, 2, 2), dtype=np.int64)
        return {cls: zero.copy() for cls in CLASSES}
    _, dense = np.unique(nbrs, return_inverse=True)
    pre, post, mid = star_center_counts(
        dense.astype(np.int64), dirs, times, int(dense.max()) + 1, np.int64(delta)
    )
    return {"pre": pre, "post": post, "mid": mid}


def count_all_stars_fast(
    graph: TemporalGraph,
    delta: int | float,
    workers: int = 1,
    instrumentation: Instrumentation | None = None,
) -> CountMatrix:
    """Star cells of the count matrix via the per-center linear sweep."""
    delta = normalize_delta(delta)
    centers = [u for u in range(graph.n) if len(graph.node_index[u])]
    graph.pair_index  # build once before the workers share it

    def work(chunk: Sequence[int]) -> tuple[CountMatrix, Instrumentation]:
        matrix = CountMatrix()
        instr = Instrumentation()
        for u in chunk:
            nbrs, dirs, times = center_events(graph, u)
            uniq, dense = np.unique(nbrs, return_inverse=True)
            pre, post, mid = star_center_counts(
                dense.astype(np.int64), dirs, times, len(uniq), np.int64(delta)
            )
            instr.record("star_center", edges=len(nbrs))
            cubes = {"pre": pre, "post": post, "mid": mid}
            for v in uniq:
                pair = count_pair_cube(graph, u, int(v), delta, 3, instr)
                for cube in cubes.values():
                    cube -= pair
            for cls, cube in cubes.items():
                for dirs3, cell in STAR_CLASS_CELL[cls].items():
                    matrix.add_at(cell, int(cube[dirs3]))
        return matrix, instr

    return parallel_sum(centers, work, workers, instrumentation)


def count_all_stars_baseline(
    graph: TemporalGraph,
    delta: int | float,
    workers: int = 1,
    instrumentation: Instrumentation | None = None,
) -> CountMatrix:
    """Star cells via one window-counter run per neighbour pair per center."""
    delta = normalize_delta(delta)
    centers = [u for u in range(graph.n) if len(graph.node_index[u])]

    def work(chunk: Sequence[int]) -> tuple[CountMatrix, Instrumentation]:
        cells = np.zeros(36, dtype=np.int64)
        instr = Instrumentation()
        for u in chunk:
            nbrs, dirs, times = center_events(graph, u)
            uniq, dense = np.unique(nbrs, return_inverse=True)
            # group event positions by dense neighbour id
            order = np.argsort(dense, kind="stable").astype(np.int64)
            starts = np.zeros(len(uniq) + 1, dtype=np.int64)
            np.cumsum(np.bincount(dense, minlength=len(uniq)), out=starts[1:])
            runs, fed = star_baseline_center(
                dirs, times, starts, order, np.int64(delta), _BASELINE_CELL, cells
            )
            instr.record("star_baseline", edges=int(fed), runs=int(runs))
        matrix = CountMatrix()
        for flat, value in enumerate(cells):
            if value:
                matrix.add_at((flat // 6 + 1, flat % 6 + 1), int(value))
        return matrix, instr

    return parallel_sum(centers, work, workers, instrumentation)
