"""Full count-matrix assembly from the class-specific pipelines."""

from __future__ import annotations

from typing import Collection

from .catalog import CountMatrix
from .graph import TemporalGraph
from .stars import count_all_stars_baseline, count_all_stars_fast
from .triangles import count_all_triangles_baseline, count_all_triangles_fast
from .verification import Instrumentation
from .windowed import count_all_2node

ALL_CLASSES = ("pair", "star", "triangle")


def count_motifs(
    graph: TemporalGraph,
    delta: int | float,
    classes: Collection[str] = ALL_CLASSES,
    algorithm: str = "fast",
    workers: int = 1,
    instrumentation: Instrumentation | None = None,
) -> CountMatrix:
    """Count matrix for the requested motif classes (others stay zero).

    ``algorithm`` selects the fast engines or the quadratic baselines for
    the star and triangle classes; the pair class has a single linear
    algorithm.  Results are identical for any ``workers`` value.
    """
    unknown = set(classes) - set(ALL_CLASSES)
    if unknown:
        raise ValueError(f"unknown motif classes: {sorted(unknown)}")
    if algorithm not in ("fast", "baseline"):
        raise ValueError(f"unknown algorithm: {algorithm!r}")
    stars = count_all_stars_fast if algorithm == "fast" else count_all_stars_baseline
    triangles = (
        count_all_triangles_fast
        if algorithm == "fast"
        else count_all_triangles_baseline
    )
    matrix = CountMatrix()
    if "pair" in classes:
        matrix = matrix + count_all_2node(graph, delta, workers, instrumentation)
    if "star" in classes:
        matrix = matrix + stars(graph, delta, workers, instrumentation)
    if "triangle" in classes:
        matrix = matrix + triangles(graph, delta, workers, instrumentation)
    return matrix
