"""Polyominoes and their first-order combinatorics.

A polyomino is a non-empty, finite, edge-connected set of unit cells.
This module provides validation, hole/thinness classification, inner
intervals, maximal blocks and maximal edge intervals, plus the text/JSON
file formats shared with the CLI.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import DisconnectedCellsError, EmptyPolyominoError
from .lattice import Cell, Interval, Point, cell_vertices

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


def _as_ll(c) -> tuple[int, int]:
    """Accept Cell, Point or raw (x, y) pair and return the plain ll tuple."""
    if isinstance(c, Cell):
        return (c.ll.x, c.ll.y)
    x, y = c
    return (int(x), int(y))


class Polyomino:
    """Immutable validated polyomino.  Construct via :func:`build`."""

    __slots__ = ("cells", "cell_set", "rank", "vertices", "_vertex_list")

    def __init__(self, cells: tuple[Cell, ...]):
        self.cells = cells
        self.cell_set = frozenset(c.ll for c in cells)
        self.rank = len(cells)
        verts: set[Point] = set()
        for c in cells:
            verts |= cell_vertices(c)
        self.vertices = frozenset(verts)
        self._vertex_list = tuple(sorted(verts))

    @property
    def vertex_list(self) -> tuple[Point, ...]:
        """Vertices sorted in the column-major order; fixes variable indexing."""
        return self._vertex_list

    def bounding_box(self) -> Interval:
        xs = [c.ll.x for c in self.cells]
        ys = [c.ll.y for c in self.cells]
        return Interval(Point(min(xs), min(ys)), Point(max(xs) + 1, max(ys) + 1))

    def contains_cell(self, ll) -> bool:
        return _as_ll(ll) in self.cell_set

    def translate(self, dx: int, dy: int) -> "Polyomino":
        return Polyomino(tuple(Cell(Point(c.ll.x + dx, c.ll.y + dy)) for c in self.cells))

    def __eq__(self, other):
        return isinstance(other, Polyomino) and self.cell_set == other.cell_set

    def __hash__(self):
        return hash(self.cell_set)

    def __repr__(self):
        return f"Polyomino({sorted(self.cell_set)})"


def build(cells: Iterable) -> Polyomino:
    """Validate and construct a polyomino from cells (deduplicated).

    Accepts Cells, Points or raw (x, y) pairs naming lower-left corners.
    Raises EmptyPolyominoError / DisconnectedCellsError.
    """
    lls = sorted({_as_ll(c) for c in cells})
    if not lls:
        raise EmptyPolyominoError("empty")
    components = _components(frozenset(lls))
    if len(components) > 1:
        raise DisconnectedCellsError(components)
    return Polyomino(tuple(Cell(Point(x, y)) for x, y in lls))


def _components(cell_set: frozenset) -> list[tuple]:
    remaining = set(cell_set)
    comps = []
    while remaining:
        seed = min(remaining)
        stack = [seed]
        comp = {seed}
        remaining.discard(seed)
        while stack:
            x, y = stack.pop()
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb in remaining:
                    remaining.discard(nb)
                    comp.add(nb)
                    stack.append(nb)
        comps.append(tuple(sorted(comp)))
    return comps


# ---------------------------------------------------------------- classification

@dataclass(frozen=True)
class ClassificationReport:
    rank: int
    vertex_count: int
    simple: bool
    holes: tuple[Polyomino, ...]
    thin: bool


def holes_of(cell_set: frozenset) -> list[tuple]:
    """Finite connected components of the cell complement.

    Flood-fills the complement inside the bounding box padded by one ring;
    the outer component touches the padding, the rest are holes.
    """
    xs = [c[0] for c in cell_set]
    ys = [c[1] for c in cell_set]
    x0, x1 = min(xs) - 1, max(xs) + 1
    y0, y1 = min(ys) - 1, max(ys) + 1
    outside: set = set()
    stack = [(x0, y0)]
    outside.add((x0, y0))
    while stack:
        x, y = stack.pop()
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            nx, ny = nb
            if x0 <= nx <= x1 and y0 <= ny <= y1 and nb not in outside and nb not in cell_set:
                outside.add(nb)
                stack.append(nb)
    leftover = {
        (x, y)
        for x in range(x0, x1 + 1)
        for y in range(y0, y1 + 1)
        if (x, y) not in cell_set and (x, y) not in outside
    }
    return _components(frozenset(leftover)) if leftover else []


def is_thin(cell_set: frozenset) -> bool:
    """No 2x2 square of cells (the square tetromino) is contained."""
    for x, y in cell_set:
        if (x + 1, y) in cell_set and (x, y + 1) in cell_set and (x + 1, y + 1) in cell_set:
            return False
    return True


def classify(p: Polyomino) -> ClassificationReport:
    hole_comps = holes_of(p.cell_set)
    holes = tuple(build(c) for c in hole_comps)
    return ClassificationReport(
        rank=p.rank,
        vertex_count=len(p.vertices),
        simple=not holes,
        holes=holes,
        thin=is_thin(p.cell_set),
    )


# ---------------------------------------------------------------- inner intervals

def inner_intervals(p: Polyomino) -> list[Interval]:
    """All proper intervals whose cell interval lies entirely in the polyomino.

    Uses 2-d prefix sums over the bounding box, so each candidate rectangle
    is tested in O(1); output is sorted by (lo, hi).
    """
    bb = p.bounding_box()
    x0, y0 = bb.lo
    w = bb.hi.x - x0
    h = bb.hi.y - y0
    # pref[i][j] = number of cells in [x0, x0+i) x [y0, y0+j)
    pref = [[0] * (h + 1) for _ in range(w + 1)]
    for i in range(1, w + 1):
        col = pref[i]
        prev = pref[i - 1]
        for j in range(1, h + 1):
            col[j] = (
                prev[j]
                + col[j - 1]
                - prev[j - 1]
                + ((x0 + i - 1, y0 + j - 1) in p.cell_set)
            )
    result = []
    for i1 in range(w):
        for i2 in range(i1 + 1, w + 1):
            for j1 in range(h):
                for j2 in range(j1 + 1, h + 1):
                    area = (i2 - i1) * (j2 - j1)
                    filled = pref[i2][j2] - pref[i1][j2] - pref[i2][j1] + pref[i1][j1]
                    if filled == area:
                        result.append(
                            Interval(Point(x0 + i1, y0 + j1), Point(x0 + i2, y0 + j2))
                        )
    result.sort()
    return result


# ---------------------------------------------------------------- blocks

class Block(NamedTuple):
    """A maximal 1-wide cell interval of the polyomino (rank >= 2)."""

    orientation: str
    cells: tuple[Cell, ...]
    a: Cell  # extremal cells, a <= b
    b: Cell

    @property
    def rank(self) -> int:
        return len(self.cells)

    def vertex_set(self) -> frozenset[Point]:
        verts: set[Point] = set()
        for c in self.cells:
            verts |= cell_vertices(c)
        return frozenset(verts)


def maximal_blocks(p: Polyomino, orientation: str) -> list[Block]:
    """Maximal runs of >= 2 consecutive cells per row (or column)."""
    if orientation not in (HORIZONTAL, VERTICAL):
        raise ValueError(f"unknown orientation: {orientation!r}")
    lines: dict[int, list[int]] = {}
    for x, y in p.cell_set:
        key, pos = (y, x) if orientation == HORIZONTAL else (x, y)
        lines.setdefault(key, []).append(pos)
    blocks = []
    for key in sorted(lines):
        positions = sorted(lines[key])
        run = [positions[0]]
        for pos in positions[1:]:
            if pos == run[-1] + 1:
                run.append(pos)
            else:
                if len(run) >= 2:
                    blocks.append(_make_block(orientation, key, run))
                run = [pos]
        if len(run) >= 2:
            blocks.append(_make_block(orientation, key, run))
    blocks.sort(key=lambda b: b.cells)
    return blocks


def _make_block(orientation: str, key: int, run: list[int]) -> Block:
    if orientation == HORIZONTAL:
        cells = tuple(Cell(Point(pos, key)) for pos in run)
    else:
        cells = tuple(Cell(Point(key, pos)) for pos in run)
    return Block(orientation=orientation, cells=cells, a=cells[0], b=cells[-1])


# ---------------------------------------------------------------- edge intervals

class EdgeInterval(NamedTuple):
    """A maximal run of unit cell edges along one lattice line."""

    orientation: str
    endpoints: tuple[Point, Point]
    maximal: bool = True

    def contains_point(self, pt) -> bool:
        (x1, y1), (x2, y2) = self.endpoints
        x, y = pt
        return x1 <= x <= x2 and y1 <= y <= y2


def maximal_edge_intervals(p: Polyomino, orientation: str) -> list[EdgeInterval]:
    """Maximal horizontal (or vertical) edge intervals of the polyomino.

    A horizontal unit edge from (x, y) to (x+1, y) belongs to the polyomino
    iff one of the two cells it bounds does.
    """
    if orientation not in (HORIZONTAL, VERTICAL):
        raise ValueError(f"unknown orientation: {orientation!r}")
    lines: dict[int, set[int]] = {}
    for x, y in p.cell_set:
        if orientation == HORIZONTAL:
            lines.setdefault(y, set()).add(x)
            lines.setdefault(y + 1, set()).add(x)
        else:
            lines.setdefault(x, set()).add(y)
            lines.setdefault(x + 1, set()).add(y)
    intervals = []
    for key in sorted(lines):
        positions = sorted(lines[key])
        start = prev = positions[0]
        for pos in positions[1:]:
            if pos != prev + 1:
                intervals.append(_make_edge_interval(orientation, key, start, prev))
                start = pos
            prev = pos
        intervals.append(_make_edge_interval(orientation, key, start, prev))
    intervals.sort(key=lambda e: e.endpoints)
    return intervals


def _make_edge_interval(orientation: str, key: int, start: int, end: int) -> EdgeInterval:
    if orientation == HORIZONTAL:
        return EdgeInterval(orientation, (Point(start, key), Point(end + 1, key)))
    return EdgeInterval(orientation, (Point(key, start), Point(key, end + 1)))


def on_common_edge_interval(p: Polyomino, pts: Iterable[Point]) -> bool:
    """True iff some maximal edge interval of the polyomino contains all points."""
    pts = list(pts)
    for orientation in (HORIZONTAL, VERTICAL):
        for ei in maximal_edge_intervals(p, orientation):
            if all(ei.contains_point(q) for q in pts):
                return True
    return False


# ---------------------------------------------------------------- file formats

def parse_cells_text(text: str) -> list[tuple[int, int]]:
    """Parse the "x y" per-line cell format ('#' comments, blanks ignored)."""
    cells = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'x y', got {raw!r}")
        try:
            cells.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {raw!r}") from None
    return cells


def from_text(text: str) -> Polyomino:
    """Build a polyomino from either the text format or its JSON equivalent."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = json.loads(text)
        if not isinstance(obj, dict) or "cells" not in obj:
            raise ValueError('JSON polyomino must be an object with a "cells" key')
        return build([(int(x), int(y)) for x, y in obj["cells"]])
    return build(parse_cells_text(text))


def from_file(path) -> Polyomino:
    with open(path, "r", encoding="utf-8") as fh:
        return from_text(fh.read())


def to_text(p: Polyomino) -> str:
    return "".join(f"{x} {y}\n" for x, y in sorted(p.cell_set))


def to_json_obj(p: Polyomino) -> dict:
    return {"cells": [[x, y] for x, y in sorted(p.cell_set)]}
