"""Counting the 8 triangle motifs.

The fast path assigns every static triangle to the one of its three node
pairs carrying the most temporal edges, then counts all triangles assigned
to a pair in one sweep over the edges incident to that pair: the heavy pair
sequence is traversed once instead of once per triangle.  The baseline path
runs the general window counter per triangle and is the cross-validation
reference.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

import numpy as np

from ._kernels import triangle_pair_counts, windowed_counts
from ._parallel import parallel_sum
from .catalog import Cell, CountMatrix, classify, grid_index
from .graph import StaticGraph, TemporalGraph, enumerate_triangles, static_projection
from .verification import Instrumentation
from .windowed import OUT, _guard_counter_range, normalize_delta

# Orientation-bit triple -> grid cell for the pair-sweep counter.
TRIANGLE_CELL: dict[tuple[int, int, int], Cell] = {
    (0, 0, 0): (1, 3),
    (0, 0, 1): (1, 4),
    (0, 1, 0): (2, 3),
    (0, 1, 1): (2, 4),
    (1, 0, 0): (3, 5),
    (1, 0, 1): (3, 6),
    (1, 1, 0): (4, 5),
    (1, 1, 1): (4, 6),
}


class TriangleAssignment:
    """Static triangles grouped by their assigned (max multiplicity) pair."""

    def __init__(self, pair_wings: dict[tuple[int, int], list[int]], total: int):
        self.pair_wings = pair_wings
        self.total = total

    def items(self) -> list[tuple[tuple[int, int], list[int]]]:
        return sorted(self.pair_wings.items())


def assign_triangles(
    static: StaticGraph, triangles: Iterable[tuple[int, int, int]]
) -> TriangleAssignment:
    """Assign each triangle to its pair with maximum sigma.

    Ties break to the lexicographically smallest pair, which keeps the
    assignment deterministic.
    """
    pair_wings: dict[tuple[int, int], list[int]] = {}
    total = 0
    for a, b, c in triangles:
        pairs = ((a, b), (a, c), (b, c))
        best = min(pairs, key=lambda p: (-static.sigma[p], p))
        wing = a + b + c - best[0] - best[1]
        pair_wings.setdefault(best, []).append(wing)
        total += 1
    return TriangleAssignment(pair_wings, total)


def _pair_sweep_arrays(
    graph: TemporalGraph, u: int, v: int, wings: Sequence[int]
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Event arrays (wing, dir, uorv, t) for the sweep over pair {u, v}.

    Pair edges get wing -1 with the u->v orientation bit stored in the dir
    slot.  A wing edge appears once per triangle membership by construction:
    wings are listed per assigned triangle.
    """
    pidx = graph.pair_index
    empty = np.empty(0, dtype=np.int64)
    idx_parts: list[np.ndarray] = []
    wing_parts: list[np.ndarray] = []
    dir_parts: list[np.ndarray] = []
    uorv_parts: list[np.ndarray] = []

    def add(idx: np.ndarray, wing: int, d: int, side: int) -> None:
        if len(idx) == 0:
            return
        idx_parts.append(idx)
        wing_parts.append(np.full(len(idx), wing, dtype=np.int64))
        dir_parts.append(np.full(len(idx), d, dtype=np.int64))
        uorv_parts.append(np.full(len(idx), side, dtype=np.int64))

    add(pidx.get((u, v), empty), -1, 1, 0)
    add(pidx.get((v, u), empty), -1, 0, 0)
    for wi, w in enumerate(wings):
        add(pidx.get((w, u), empty), wi, 0, 0)
        add(pidx.get((u, w), empty), wi, 1, 0)
        add(pidx.get((w, v), empty), wi, 0, 1)
        add(pidx.get((v, w), empty), wi, 1, 1)

    idx = np.concatenate(idx_parts)
    order = np.argsort(idx)
    return (
        np.concatenate(wing_parts)[order],
        np.concatenate(dir_parts)[order],
        np.concatenate(uorv_parts)[order],
        graph.t[idx[order]],
    )


def count_triangles_pair(
    events: Iterable[tuple[int, int, int, int]], u: int, v: int, delta: int | float
) -> np.ndarray:
    """Triangle counts from explicit (nbr, dir, uorv, t) events on {u, v}.

    Wing events carry the third node in ``nbr``; events on the pair itself
    have ``nbr`` in {u, v} and their orientation is recovered from
    (nbr == u) XOR dir.  Events must be time-sorted.
    """
    ev = list(events)
    times = np.asarray([e[3] for e in ev], dtype=np.int64)
    if np.any(times[1:] < times[:-1]):
        raise ValueError("events must be sorted by timestamp")
    wing_ids: dict[int, int] = {}
    wings = np.empty(len(ev), dtype=np.int64)
    dirs = np.empty(len(ev), dtype=np.int64)
    uorvs = np.zeros(len(ev), dtype=np.int64)
    for i, (nbr, d, side, _) in enumerate(ev):
        if nbr == u or nbr == v:
            wings[i] = -1
            dirs[i] = (1 if nbr == u else 0) ^ d
        else:
            wings[i] = wing_ids.setdefault(nbr, len(wing_ids))
            dirs[i] = d
            uorvs[i] = side
    return triangle_pair_counts(
        wings, dirs, uorvs, times, max(len(wing_ids), 1), np.int64(normalize_delta(delta))
    )


def count_all_triangles_fast(
    graph: TemporalGraph,
    delta: int | float,
    workers: int = 1,
    instrumentation: Instrumentation | None = None,
) -> CountMatrix:
    """Triangle cells of the count matrix via assignment plus pair sweeps."""
    delta = normalize_delta(delta)
    static = static_projection(graph)
    assignment = assign_triangles(static, enumerate_triangles(static))
    items = assignment.items()

    def work(chunk) -> tuple[CountMatrix, Instrumentation]:
        matrix = CountMatrix()
        instr = Instrumentation()
        for (u, v), wings in chunk:
            wing_arr, dir_arr, uorv_arr, times = _pair_sweep_arrays(graph, u, v, wings)
            cube = triangle_pair_counts(
                wing_arr, dir_arr, uorv_arr, times, len(wings), np.int64(delta)
            )
            instr.record("triangle_pair", edges=len(wing_arr))
            for bits, cell in TRIANGLE_CELL.items():
                matrix.add_at(cell, int(cube[bits]))
        return matrix, instr

    return parallel_sum(items, work, workers, instrumentation)


def _baseline_cell_table() -> np.ndarray:
    """Letter-triple -> flat cell id for the 6-letter per-triangle alphabet.

    For a triangle (a < b < c) the letters are slot*2 + orient with slots
    {a,b}=0, {a,c}=1, {b,c}=2 and orient 1 when the edge leaves the smaller
    endpoint.  Triples that do not cover all three slots are not triangle
    instances and get -1 (they are counted by the pair/star pipelines).
    """
    slot_nodes = ((0, 1), (0, 2), (1, 2))
    table = np.full(216, -1, dtype=np.int64)
    for l1, l2, l3 in product(range(6), repeat=3):
        if {l1 // 2, l2 // 2, l3 // 2} != {0, 1, 2}:
            continue
        edges = []
        for letter in (l1, l2, l3):
            x, y = slot_nodes[letter // 2]
            edges.append((x, y) if letter % 2 == OUT else (y, x))
        i, j = grid_index(classify(edges))
        table[(l1 * 6 + l2) * 6 + l3] = (i - 1) * 6 + (j - 1)
    return table


_BASELINE_TRI_CELL = _baseline_cell_table()


def count_all_triangles_baseline(
    graph: TemporalGraph,
    delta: int | float,
    workers: int = 1,
    instrumentation: Instrumentation | None = None,
) -> CountMatrix:
    """Triangle cells via one window-counter run per static triangle."""
    delta = normalize_delta(delta)
    static = static_projection(graph)
    triangles = enumerate_triangles(static)
    pidx = graph.pair_index
    empty = np.empty(0, dtype=np.int64)

    def work(chunk) -> tuple[CountMatrix, Instrumentation]:
        cells = np.zeros(36, dtype=np.int64)
        instr = Instrumentation()
        for a, b, c in chunk:
            parts = []
            letters = []
            for slot, (x, y) in enumerate(((a, b), (a, c), (b, c))):
                fwd = pidx.get((x, y), empty)
                bwd = pidx.get((y, x), empty)
                parts.extend((fwd, bwd))
                letters.extend(
                    (
                        np.full(len(fwd), slot * 2 + 1, dtype=np.int64),
                        np.full(len(bwd), slot * 2, dtype=np.int64),
                    )
                )
            idx = np.concatenate(parts)
            order = np.argsort(idx)
            keys = np.concatenate(letters)[order]
            times = graph.t[idx[order]]
            _guard_counter_range(len(keys), 3)
            flat = windowed_counts(keys, times, 6, 3, np.int64(delta))
            instr.record("triangle_baseline", edges=len(keys))
            triples = flat[6 + 36 :]
            for key in range(216):
                cell = _BASELINE_TRI_CELL[key]
                if cell >= 0 and triples[key]:
                    cells[cell] += triples[key]
        matrix = CountMatrix()
        for flat_cell, value in enumerate(cells):
            if value:
                matrix.add_at((flat_cell // 6 + 1, flat_cell % 6 + 1), int(value))
        return matrix, instr

    return parallel_sum(triangles, work, workers, instrumentation)
