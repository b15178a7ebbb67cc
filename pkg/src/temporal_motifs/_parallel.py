"""Chunked worker execution for the per-pair and per-center counting loops.

Partial results are integer count matrices, so summation is commutative and
the outcome is identical for any worker count.  The kernels release the GIL,
which is what makes thread workers worthwhile here.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

from .catalog import CountMatrix
from .verification import Instrumentation

T = TypeVar("T")


def split_chunks(items: Sequence[T], workers: int) -> list[Sequence[T]]:
    workers = max(1, min(int(workers), len(items)) if items else 1)
    if workers == 1:
        return [items] if len(items) else []
    size = (len(items) + workers - 1) // workers
    return [items[i : i + size] for i in range(0, len(items), size)]


def parallel_sum(
    items: Sequence[T],
    work: Callable[[Sequence[T]], tuple[CountMatrix, Instrumentation]],
    workers: int,
    instrumentation: Instrumentation | None,
) -> CountMatrix:
    """Apply ``work`` to chunks of ``items`` and sum the partial matrices."""
    chunks = split_chunks(items, workers)
    if not chunks:
        return CountMatrix()
    if len(chunks) == 1:
        partials = [work(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            partials = list(pool.map(work, chunks))
    total = CountMatrix()
    for matrix, instr in partials:
        total = total + matrix
        if instrumentation is not None:
            instrumentation.merge(instr)
    return total
