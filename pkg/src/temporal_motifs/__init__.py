"""Exact counting of delta-temporal motifs in timestamped directed graphs.

A motif is an ordered sequence of directed edges on a small node set; an
instance is a set of temporal edges matching the sequence under a node
bijection, in time order, with total span at most delta.  This package
counts all 36 two- and three-node, three-edge motifs with fast per-center
and per-pair algorithms, keeps a brute-force oracle for verification, and
ships a CLI for counting, analysis and benchmarking.
"""

from .analysis import AnalysisReport, analyze, timescale_counts
from .catalog import (
    BLOCKING_CELLS,
    CYCLIC_TRIANGLE_CELLS,
    NONBLOCKING_CELLS,
    PAIR_CELLS,
    STAR_CELLS,
    TRIANGLE_CELLS,
    CountMatrix,
    DisconnectedPatternError,
    Motif,
    MotifClass,
    OutOfGridError,
    classify,
    export_grid_csv,
    grid_index,
    grid_motif,
    motif_class,
)
from .graph import (
    EdgeListParseError,
    StaticGraph,
    TemporalEdge,
    TemporalGraph,
    build_graph,
    enumerate_triangles,
    load_edge_list,
    static_projection,
    write_edge_list,
)
from .pipeline import ALL_CLASSES, count_motifs
from .stars import count_all_stars_baseline, count_all_stars_fast, count_stars_center
from .triangles import (
    TriangleAssignment,
    assign_triangles,
    count_all_triangles_baseline,
    count_all_triangles_fast,
    count_triangles_pair,
)
from .verification import (
    Instrumentation,
    OracleCapExceededError,
    gen_random,
    gen_worstcase,
    oracle_count,
)
from .windowed import (
    DELTA_INF,
    IN,
    OUT,
    CountOverflowError,
    count_all_2node,
    count_pair,
    count_subsequences,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CLASSES",
    "AnalysisReport",
    "BLOCKING_CELLS",
    "CYCLIC_TRIANGLE_CELLS",
    "CountMatrix",
    "CountOverflowError",
    "DELTA_INF",
    "DisconnectedPatternError",
    "EdgeListParseError",
    "IN",
    "Instrumentation",
    "Motif",
    "MotifClass",
    "NONBLOCKING_CELLS",
    "OUT",
    "OracleCapExceededError",
    "OutOfGridError",
    "PAIR_CELLS",
    "STAR_CELLS",
    "StaticGraph",
    "TRIANGLE_CELLS",
    "TemporalEdge",
    "TemporalGraph",
    "TriangleAssignment",
    "analyze",
    "assign_triangles",
    "build_graph",
    "classify",
    "count_all_2node",
    "count_all_stars_baseline",
    "count_all_stars_fast",
    "count_all_triangles_baseline",
    "count_all_triangles_fast",
    "count_motifs",
    "count_pair",
    "count_stars_center",
    "count_subsequences",
    "count_triangles_pair",
    "enumerate_triangles",
    "export_grid_csv",
    "gen_random",
    "gen_worstcase",
    "grid_index",
    "grid_motif",
    "load_edge_list",
    "motif_class",
    "oracle_count",
    "static_projection",
    "timescale_counts",
    "write_edge_list",
]
