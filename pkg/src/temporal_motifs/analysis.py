"""Derived communication metrics and time-scale differencing.

The metrics summarize a count matrix: how much of the traffic is
back-and-forth conversation on one pair (blocking), how much is fan-out
from one source to two targets (non-blocking), how often non-blocking
senders switch targets twice versus once, and what fraction of triangle
activity is cyclic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Sequence

from .catalog import (
    BLOCKING_CELLS,
    CYCLIC_TRIANGLE_CELLS,
    NONBLOCKING_CELLS,
    TRIANGLE_CELLS,
    CountMatrix,
)
from .graph import TemporalGraph
from .pipeline import ALL_CLASSES, count_motifs
from .verification import Instrumentation

SWITCH2_CELL = (4, 1)
SWITCH1_CELLS = frozenset({(4, 3), (6, 3)})


@dataclass
class AnalysisReport:
    """Fractions are None when their denominator is zero."""

    blocking_fraction: float | None
    nonblocking_fraction: float | None
    switch_ratio: float | None
    cyclic_triangle_fraction: float | None

    def to_dict(self) -> dict:
        return {
            "blocking_fraction": self.blocking_fraction,
            "nonblocking_fraction": self.nonblocking_fraction,
            "switch_ratio": self.switch_ratio,
            "cyclic_triangle_fraction": self.cyclic_triangle_fraction,
        }


def analyze(matrix: CountMatrix) -> AnalysisReport:
    total = matrix.total()
    triangle_total = matrix.total(TRIANGLE_CELLS)
    one_switch = matrix.total(SWITCH1_CELLS)
    return AnalysisReport(
        blocking_fraction=(
            matrix.total(BLOCKING_CELLS) / total if total else None
        ),
        nonblocking_fraction=(
            matrix.total(NONBLOCKING_CELLS) / total if total else None
        ),
        switch_ratio=(matrix[SWITCH2_CELL] / one_switch if one_switch else None),
        cyclic_triangle_fraction=(
            matrix.total(CYCLIC_TRIANGLE_CELLS) / triangle_total
            if triangle_total
            else None
        ),
    )


def timescale_counts(
    graph: TemporalGraph,
    deltas: Sequence[int | float],
    classes: Collection[str] = ALL_CLASSES,
    workers: int = 1,
    instrumentation: Instrumentation | None = None,
) -> list[tuple[tuple[int | float, int | float], CountMatrix]]:
    """Counts of motifs completing within successive window intervals.

    ``deltas`` must be strictly ascending.  The first entry is the plain
    count at the smallest delta (interval [0, d1]); each later entry is the
    difference count(d_k) - count(d_{k-1}), i.e. motifs spanning
    (d_{k-1}, d_k].  Cell-wise monotonicity in delta makes every difference
    non-negative.
    """
    if not deltas:
        raise ValueError("need at least one delta")
    if any(b <= a for a, b in zip(deltas, deltas[1:])):
        raise ValueError("deltas must be strictly ascending")
    intervals: list[tuple[tuple[int | float, int | float], CountMatrix]] = []
    previous: CountMatrix | None = None
    low: int | float = 0
    for delta in deltas:
        matrix = count_motifs(
            graph, delta, classes=classes, workers=workers, instrumentation=instrumentation
        )
        intervals.append(((low, delta), matrix if previous is None else matrix - previous))
        previous = matrix
        low = delta
    return intervals
