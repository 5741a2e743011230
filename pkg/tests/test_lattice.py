import pytest

from polyomino_ideals.errors import NotProperIntervalError
from polyomino_ideals.lattice import (
    Cell,
    Interval,
    Point,
    cell,
    cell_vertices,
    corners,
    interval_point_intersection,
)


def test_corners_unit_cell():
    cp = corners(Interval(Point(0, 0), Point(1, 1)))
    assert cp.diagonal == (Point(0, 0), Point(1, 1))
    assert set(cp.antidiagonal) == {Point(0, 1), Point(1, 0)}


def test_corners_wide_interval():
    cp = corners(Interval(Point(2, 1), Point(5, 3)))
    assert cp.diagonal == (Point(2, 1), Point(5, 3))
    assert set(cp.antidiagonal) == {Point(2, 3), Point(5, 1)}


def test_corners_rejects_horizontal_segment():
    with pytest.raises(NotProperIntervalError, match="not proper"):
        corners(Interval(Point(0, 0), Point(3, 0)))


def test_corners_rejects_point():
    with pytest.raises(NotProperIntervalError):
        corners(Interval(Point(1, 1), Point(1, 1)))


@pytest.mark.parametrize(
    "ll,expected",
    [
        ((0, 0), {(0, 0), (1, 0), (0, 1), (1, 1)}),
        ((2, 2), {(2, 2), (3, 2), (2, 3), (3, 3)}),
        ((-1, 0), {(-1, 0), (0, 0), (-1, 1), (0, 1)}),
    ],
)
def test_cell_vertices(ll, expected):
    assert cell_vertices(cell(*ll)) == {Point(*p) for p in expected}


def test_corner_pairs_are_four_distinct_points():
    for lo, hi in [((0, 0), (1, 1)), ((-3, 2), (1, 5)), ((7, -2), (9, 0))]:
        cp = corners(Interval(Point(*lo), Point(*hi)))
        assert len(set(cp.diagonal) | set(cp.antidiagonal)) == 4


def test_adjacent_cells_share_two_vertices_diagonal_one():
    a = cell_vertices(cell(0, 0))
    assert len(a & cell_vertices(cell(1, 0))) == 2
    assert len(a & cell_vertices(cell(0, 1))) == 2
    assert len(a & cell_vertices(cell(1, 1))) == 1
    assert len(a & cell_vertices(cell(2, 0))) == 0


def test_point_order_is_column_major():
    assert Point(0, 5) < Point(1, -10)
    assert Point(1, 2) < Point(1, 3)
    assert Point(2, 2) == (2, 2)  # tuple interop


def test_interval_point_intersection():
    a = Interval(Point(0, 0), Point(2, 1))
    b = Interval(Point(2, 1), Point(4, 3))
    count, pt = interval_point_intersection(a, b)
    assert (count, pt) == (1, Point(2, 1))
    count, _ = interval_point_intersection(a, Interval(Point(1, 0), Point(3, 2)))
    assert count == 4
    count, _ = interval_point_intersection(a, Interval(Point(5, 5), Point(6, 6)))
    assert count == 0


def test_cell_corner_roles():
    c = cell(2, 3)
    assert c.ll == Point(2, 3)
    assert c.ur == Point(3, 4)
    assert c.ul == Point(2, 4)
    assert c.lr == Point(3, 3)
    assert c.interval == Interval(Point(2, 3), Point(3, 4))
