"""Primitive geometry of the integer lattice: points, intervals, cells, corners.

Coordinates are arbitrary signed integers; nothing is normalised at this
layer.  All types are immutable value types and safe to share.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import NotProperIntervalError


class Point(NamedTuple):
    """A lattice point.  Tuple order gives the column-major total order:
    (i, j) < (k, l) iff i < k, or i = k and j < l."""

    x: int
    y: int

    def __add__(self, other):  # vector addition, not tuple concatenation
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])

    def __str__(self):
        return f"({self.x},{self.y})"


class Interval(NamedTuple):
    """The lattice interval [lo, hi] = {p : lo <= p <= hi componentwise}."""

    lo: Point
    hi: Point

    @property
    def is_proper(self) -> bool:
        return self.lo.x < self.hi.x and self.lo.y < self.hi.y

    def contains_point(self, p: Point) -> bool:
        return self.lo.x <= p[0] <= self.hi.x and self.lo.y <= p[1] <= self.hi.y

    def cell_lls(self):
        """Lower-left corners of the cells of the associated cell interval."""
        for x in range(self.lo.x, self.hi.x):
            for y in range(self.lo.y, self.hi.y):
                yield Point(x, y)

    def __str__(self):
        return f"[{self.lo},{self.hi}]"


class Cell(NamedTuple):
    """A unit cell, identified by its lower-left corner."""

    ll: Point

    @property
    def ur(self) -> Point:
        return Point(self.ll.x + 1, self.ll.y + 1)

    @property
    def ul(self) -> Point:
        return Point(self.ll.x, self.ll.y + 1)

    @property
    def lr(self) -> Point:
        return Point(self.ll.x + 1, self.ll.y)

    @property
    def interval(self) -> Interval:
        return Interval(self.ll, self.ur)

    def __str__(self):
        return f"C{self.ll}"


class CornerPair(NamedTuple):
    """Both corner pairs of a proper interval, each stored sorted by (x, y)."""

    diagonal: tuple[Point, Point]
    antidiagonal: tuple[Point, Point]


def cell(x: int, y: int) -> Cell:
    return Cell(Point(x, y))


def corners(iv: Interval) -> CornerPair:
    """Diagonal and anti-diagonal corner pairs of a proper interval.

    Raises NotProperIntervalError for degenerate intervals (points and
    horizontal/vertical segments have no anti-diagonal corners).
    """
    if not iv.is_proper:
        raise NotProperIntervalError(f"not proper: {iv}")
    lo, hi = iv.lo, iv.hi
    anti = tuple(sorted((Point(lo.x, hi.y), Point(hi.x, lo.y))))
    return CornerPair(diagonal=(lo, hi), antidiagonal=anti)


def cell_vertices(c: Cell) -> frozenset[Point]:
    """The four vertices of a cell."""
    ll = c.ll
    return frozenset(
        (ll, Point(ll.x + 1, ll.y), Point(ll.x, ll.y + 1), Point(ll.x + 1, ll.y + 1))
    )


def cell_edges(c: Cell) -> frozenset[frozenset[Point]]:
    """The four edges of a cell, each an unordered pair of vertices."""
    a, b, cc, d = c.ll, c.ur, c.ul, c.lr
    return frozenset(
        (frozenset((a, cc)), frozenset((cc, b)), frozenset((b, d)), frozenset((a, d)))
    )


def interval_point_intersection(i1: Interval, i2: Interval):
    """Intersection of two intervals as point sets, without materialising them.

    Returns (count, point) where point is meaningful only when count == 1.
    """
    lx, hx = max(i1.lo.x, i2.lo.x), min(i1.hi.x, i2.hi.x)
    ly, hy = max(i1.lo.y, i2.lo.y), min(i1.hi.y, i2.hi.y)
    if lx > hx or ly > hy:
        return 0, None
    count = (hx - lx + 1) * (hy - ly + 1)
    return count, (Point(lx, ly) if count == 1 else None)
