"""Brute-force oracle, synthetic generators and instrumentation counters.

Everything here exists to make the production counting paths independently
checkable: the oracle enumerates edge triples directly, the generators build
graphs with known counts, and Instrumentation records how much work each
engine actually did.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .catalog import PATTERN_CELL, CountMatrix
from .graph import TemporalGraph, build_graph


class OracleCapExceededError(ValueError):
    """Graph too large for the cubic-time oracle (raise the cap explicitly)."""


@dataclass
class Instrumentation:
    """Work counters for counting runs.

    Per engine ``kind`` this tracks the number of runs and the number of
    edges fed to that engine.  ``events_processed`` counts two events per
    fed edge: one when it enters the counting structure and one when it
    leaves (by window eviction or end of run).
    """

    counters: dict[str, int] = field(default_factory=dict)

    def record(self, kind: str, edges: int, runs: int = 1) -> None:
        self.counters[f"{kind}_runs"] = self.counters.get(f"{kind}_runs", 0) + runs
        self.counters[f"{kind}_edges"] = self.counters.get(f"{kind}_edges", 0) + edges

    def merge(self, other: "Instrumentation") -> None:
        for key, value in other.counters.items():
            self.counters[key] = self.counters.get(key, 0) + value

    def runs(self, kind: str) -> int:
        return self.counters.get(f"{kind}_runs", 0)

    def edges(self, kind: str) -> int:
        return self.counters.get(f"{kind}_edges", 0)

    @property
    def sequences_run(self) -> int:
        return sum(v for k, v in self.counters.items() if k.endswith("_runs"))

    @property
    def events_processed(self) -> int:
        return 2 * sum(v for k, v in self.counters.items() if k.endswith("_edges"))

    def report(self, wall_time: float | None = None) -> dict:
        out = {
            "events_processed": self.events_processed,
            "sequences_run": self.sequences_run,
            "counters": dict(sorted(self.counters.items())),
        }
        if wall_time is not None:
            out["wall_time_seconds"] = wall_time
        return out


def oracle_count(
    graph: TemporalGraph, delta: int | float, cap: int = 200
) -> CountMatrix:
    """Count all 36 motif cells by scanning every time-ordered edge triple.

    Cubic in the number of edges, so refuses graphs above ``cap``.  This is
    the ground truth the production pipelines are tested against; it shares
    only the pattern table with them, not the counting machinery.
    """
    if graph.m > cap:
        raise OracleCapExceededError(
            f"oracle refuses m={graph.m} > cap={cap}; raise cap explicitly"
        )
    unbounded = delta == math.inf
    span = None if unbounded else int(delta)
    src = graph.src.tolist()
    dst = graph.dst.tolist()
    ts = graph.t.tolist()
    m = graph.m
    matrix = CountMatrix()
    for i in range(m):
        ti = ts[i]
        si, di_ = src[i], dst[i]
        for j in range(i + 1, m):
            if span is not None and ts[j] - ti > span:
                break
            sj, dj = src[j], dst[j]
            for k in range(j + 1, m):
                if span is not None and ts[k] - ti > span:
                    break
                nodes = {si, di_, sj, dj, src[k], dst[k]}
                if len(nodes) > 3:
                    continue
                labels: dict[int, int] = {}
                pattern = []
                for a, b in ((si, di_), (sj, dj), (src[k], dst[k])):
                    la = labels.setdefault(a, len(labels) + 1)
                    lb = labels.setdefault(b, len(labels) + 1)
                    pattern.append((la, lb))
                # any 3 self-loop-free edges on <= 3 nodes are connected
                matrix.add_at(PATTERN_CELL[tuple(pattern)], 1)
    return matrix


def gen_random(n: int, m: int, t_max: int, seed: int) -> TemporalGraph:
    """Random multigraph: m edges uniform over ordered distinct node pairs,
    timestamps uniform on [0, t_max].  Duplicate timestamps are allowed on
    purpose to exercise the tie-break path.
    """
    if m > 0 and n < 2:
        raise ValueError("need n >= 2 to draw edges without self-loops")
    rng = np.random.default_rng(seed)
    src = rng.integers(0, n, size=m, dtype=np.int64)
    dst = rng.integers(0, n - 1, size=m, dtype=np.int64) if m else np.empty(0, np.int64)
    dst = dst + (dst >= src)
    t = rng.integers(0, t_max + 1, size=m, dtype=np.int64)
    return build_graph(src, dst, t, n=n)


def gen_worstcase(n: int, m: int) -> TemporalGraph:
    """Adversarial instance for per-triangle counting.

    Nodes u=0, v=1 and wings w_1..w_n (ids 2..n+1).  Edges: w_i->u at
    t=2i-1, w_i->v at t=2i, then m-2n edges u->v at t=2n+1..m.  Every
    triangle shares the pair {u, v}, which carries the bulk of the edges.
    """
    if n < 1 or m <= 2 * n:
        raise ValueError("need m > 2n >= 2")
    src = np.empty(m, dtype=np.int64)
    dst = np.empty(m, dtype=np.int64)
    t = np.arange(1, m + 1, dtype=np.int64)
    for i in range(n):
        src[2 * i] = i + 2
        dst[2 * i] = 0
        src[2 * i + 1] = i + 2
        dst[2 * i + 1] = 1
    src[2 * n :] = 0
    dst[2 * n :] = 1
    return build_graph(src, dst, t, n=n + 2)
