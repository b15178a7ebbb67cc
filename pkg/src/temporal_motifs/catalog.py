"""Canonical 3-edge motif patterns and the 6x6 counting grid.

A motif pattern is an ordered sequence of directed edges over abstract node
labels, where labels 1..k are assigned in order of first appearance.  Two
edge sequences are instances of the same motif exactly when their canonical
patterns are equal, so pattern equality replaces isomorphism search.

The 36 patterns with 3 edges on at most 3 nodes are arranged in a 6x6 grid
``M[i][j]``: every pattern's first edge is ``(1, 2)``, all cells in row ``i``
share the same second edge, and all cells in column ``j`` share the same
third edge.  Four cells are two-node ("pair") motifs, eight are triangles,
and the remaining 24 are stars.
"""

from __future__ import annotations

import csv
import enum
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator, Sequence

Edge = tuple[int, int]
Pattern = tuple[Edge, ...]
Cell = tuple[int, int]


class DisconnectedPatternError(ValueError):
    """Edge sequence whose induced static graph is not connected."""


class OutOfGridError(ValueError):
    """Motif has no cell in the 6x6 grid (requires 3 edges on <= 3 nodes)."""


class MotifClass(enum.Enum):
    """Structural class of a grid motif.  PAIR means both nodes share all edges."""

    PAIR = "pair"
    STAR = "star"
    TRIANGLE = "triangle"


def _is_connected(pattern: Pattern) -> bool:
    nodes = {n for e in pattern for n in e}
    if len(nodes) <= 1:
        return True
    reached = {next(iter(nodes))}
    frontier = True
    while frontier:
        frontier = False
        for a, b in pattern:
            if (a in reached) != (b in reached):
                reached.update((a, b))
                frontier = True
    return reached == nodes


@dataclass(frozen=True)
class Motif:
    """An ordered, canonically labelled edge pattern.

    Labels must be 1..k in order of first appearance and the induced static
    graph must be connected; both are checked at construction time.
    """

    pattern: Pattern

    def __post_init__(self) -> None:
        next_label = 1
        for src, dst in self.pattern:
            if src == dst:
                raise ValueError(f"self-loop in pattern: {self.pattern}")
            for node in (src, dst):
                if node == next_label:
                    next_label += 1
                elif not (1 <= node < next_label):
                    raise ValueError(
                        f"labels not in first-appearance order: {self.pattern}"
                    )
        if self.pattern and not _is_connected(self.pattern):
            raise DisconnectedPatternError(
                f"induced static graph is disconnected: {self.pattern}"
            )

    @property
    def node_count(self) -> int:
        return len({n for e in self.pattern for n in e})

    @property
    def edge_count(self) -> int:
        return len(self.pattern)

    def __str__(self) -> str:
        return ";".join(f"{a}->{b}" for a, b in self.pattern)


def classify(edges: Iterable[Sequence[int]]) -> Motif:
    """Canonicalize a time-ordered edge sequence into a Motif.

    ``edges`` yields items whose first two fields are (src, dst); timestamps,
    if present, are ignored because the caller supplies edges already in time
    order.  Raises DisconnectedPatternError when the edges do not induce a
    connected static graph.
    """
    labels: dict[int, int] = {}
    pattern = []
    for e in edges:
        src, dst = e[0], e[1]
        a = labels.setdefault(src, len(labels) + 1)
        b = labels.setdefault(dst, len(labels) + 1)
        pattern.append((a, b))
    return Motif(tuple(pattern))


# Grid layout.  The second edge is constant along each row and the third
# edge is constant along each column; the first edge is always (1, 2).
_FIRST_EDGE: Edge = (1, 2)

ROW_SECOND_EDGE: dict[int, Edge] = {
    1: (3, 2),
    2: (2, 3),
    3: (3, 1),
    4: (1, 3),
    5: (2, 1),
    6: (1, 2),
}

COL_THIRD_EDGE: dict[int, Edge] = {
    1: (1, 2),
    2: (2, 1),
    3: (1, 3),
    4: (3, 1),
    5: (2, 3),
    6: (3, 2),
}

GRID_PATTERN: dict[Cell, Pattern] = {
    (i, j): (_FIRST_EDGE, ROW_SECOND_EDGE[i], COL_THIRD_EDGE[j])
    for i in range(1, 7)
    for j in range(1, 7)
}

PATTERN_CELL: dict[Pattern, Cell] = {p: c for c, p in GRID_PATTERN.items()}
assert len(PATTERN_CELL) == 36

ALL_CELLS: tuple[Cell, ...] = tuple(sorted(GRID_PATTERN))


def grid_motif(i: int, j: int) -> Motif:
    """The canonical motif at grid cell (i, j), 1-based."""
    try:
        return Motif(GRID_PATTERN[(i, j)])
    except KeyError:
        raise OutOfGridError(f"no grid cell ({i}, {j})") from None


def grid_index(motif: Motif) -> Cell:
    """Grid cell of a 3-edge motif on at most 3 nodes."""
    cell = PATTERN_CELL.get(motif.pattern)
    if cell is None:
        raise OutOfGridError(
            f"motif {motif} is outside the 6x6 grid "
            f"(k={motif.node_count}, l={motif.edge_count})"
        )
    return cell


def motif_class(motif: Motif) -> MotifClass:
    """PAIR, STAR or TRIANGLE for a motif in the grid."""
    grid_index(motif)  # reuse the out-of-grid check
    if motif.node_count == 2:
        return MotifClass.PAIR
    static_pairs = {frozenset(e) for e in motif.pattern}
    return MotifClass.TRIANGLE if len(static_pairs) == 3 else MotifClass.STAR


def _cells_where(pred) -> frozenset[Cell]:
    return frozenset(c for c, p in GRID_PATTERN.items() if pred(p))


def _is_cyclic_triangle(pattern: Pattern) -> bool:
    if len({frozenset(e) for e in pattern}) != 3:
        return False
    indeg: dict[int, int] = {}
    for _, dst in pattern:
        indeg[dst] = indeg.get(dst, 0) + 1
    return all(indeg.get(n, 0) == 1 for n in (1, 2, 3))


PAIR_CELLS = _cells_where(lambda p: len({n for e in p for n in e}) == 2)
TRIANGLE_CELLS = _cells_where(lambda p: len({frozenset(e) for e in p}) == 3)
STAR_CELLS = frozenset(GRID_PATTERN) - PAIR_CELLS - TRIANGLE_CELLS

# Derived groups used by the analysis metrics: cyclic triangles, pair cells
# with traffic in both directions ("blocking"), and single-source fan-outs
# to two targets ("non-blocking").
CYCLIC_TRIANGLE_CELLS = _cells_where(_is_cyclic_triangle)
BLOCKING_CELLS = _cells_where(
    lambda p: len({n for e in p for n in e}) == 2 and len(set(p)) == 2
)
NONBLOCKING_CELLS = _cells_where(
    lambda p: len({a for a, _ in p}) == 1 and len({b for _, b in p}) == 2
)


class CountMatrix:
    """6x6 motif instance counts, indexed by 1-based (row, col) cells.

    Entries are Python ints, so sums never wrap; equality, addition and
    subtraction are elementwise.
    """

    __slots__ = ("_cells",)

    def __init__(self, rows: Iterable[Iterable[int]] | None = None):
        if rows is None:
            self._cells = [[0] * 6 for _ in range(6)]
        else:
            cells = [[int(x) for x in row] for row in rows]
            if len(cells) != 6 or any(len(r) != 6 for r in cells):
                raise ValueError("expected a 6x6 array")
            self._cells = cells

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        return self._cells[i - 1][j - 1]

    def __setitem__(self, cell: Cell, value: int) -> None:
        i, j = cell
        self._cells[i - 1][j - 1] = int(value)

    def add_at(self, cell: Cell, value: int) -> None:
        i, j = cell
        self._cells[i - 1][j - 1] += int(value)

    def __add__(self, other: "CountMatrix") -> "CountMatrix":
        return CountMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._cells, other._cells)
        )

    def __sub__(self, other: "CountMatrix") -> "CountMatrix":
        return CountMatrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._cells, other._cells)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CountMatrix):
            return NotImplemented
        return self._cells == other._cells

    def __hash__(self) -> int:  # pragma: no cover - not used as dict key
        return hash(tuple(tuple(r) for r in self._cells))

    def copy(self) -> "CountMatrix":
        return CountMatrix(self._cells)

    def total(self, cells: Iterable[Cell] | None = None) -> int:
        if cells is None:
            return sum(sum(r) for r in self._cells)
        return sum(self[c] for c in cells)

    def items(self) -> Iterator[tuple[Cell, int]]:
        """Row-major (i outer, j inner) cell/count pairs."""
        for i in range(1, 7):
            for j in range(1, 7):
                yield (i, j), self._cells[i - 1][j - 1]

    def to_rows(self) -> list[list[int]]:
        return [list(r) for r in self._cells]

    @classmethod
    def from_cells(cls, counts: dict[Cell, int]) -> "CountMatrix":
        out = cls()
        for cell, v in counts.items():
            out[cell] = v
        return out

    def __repr__(self) -> str:
        body = "\n".join(" ".join(f"{v:>8d}" for v in row) for row in self._cells)
        return f"CountMatrix(total={self.total()})\n{body}"


def export_grid_csv(target: str | Path | IO[str]) -> None:
    """Write the grid as CSV rows ``row,col,pattern,class`` for external tools."""
    own = isinstance(target, (str, Path))
    fh = open(target, "w", newline="") if own else target
    try:
        writer = csv.writer(fh)
        writer.writerow(["row", "col", "pattern", "class"])
        for (i, j) in ALL_CELLS:
            motif = grid_motif(i, j)
            writer.writerow([i, j, str(motif), motif_class(motif).value])
    finally:
        if own:
            fh.close()
