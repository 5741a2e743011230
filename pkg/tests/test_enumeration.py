import pytest

from polyomino_ideals import classify, closed_path_sequence
from polyomino_ideals.enumeration import (
    EnumerationConfig,
    canonical_form,
    count_polyominoes_in_window,
    enumerate_closed_paths,
    enumerate_polyominoes,
)


def test_config_validation():
    with pytest.raises(ValueError):
        EnumerationConfig(0)
    with pytest.raises(ValueError):
        EnumerationConfig(3, filters=frozenset({"bogus"}))
    with pytest.raises(ValueError):
        EnumerationConfig(3, filters=frozenset({"simple", "non-simple"}))
    with pytest.raises(ValueError):
        EnumerationConfig(3, dedup="rotation")


def test_counts_match_window_oracle_free():
    for rank, expected in [(1, 1), (2, 1), (3, 2), (4, 5)]:
        got = sum(
            1
            for p in enumerate_polyominoes(EnumerationConfig(rank, dedup="dihedral"))
            if p.rank == rank
        )
        assert got == expected == count_polyominoes_in_window(rank, "dihedral")


def test_counts_match_window_oracle_fixed():
    for rank, expected in [(1, 1), (2, 2), (3, 6), (4, 19)]:
        got = sum(
            1
            for p in enumerate_polyominoes(EnumerationConfig(rank, dedup="translation"))
            if p.rank == rank
        )
        assert got == expected == count_polyominoes_in_window(rank, "translation")


def test_dominoes():
    out = list(enumerate_polyominoes(EnumerationConfig(2, dedup="translation")))
    assert [tuple(sorted(p.cell_set)) for p in out if p.rank == 2] == [
        ((0, 0), (0, 1)),
        ((0, 0), (1, 0)),
    ]


def test_filters_thin_simple():
    cfg = EnumerationConfig(4, filters=frozenset({"thin"}), dedup="dihedral")
    thin = list(enumerate_polyominoes(cfg))
    assert all(classify(p).thin for p in thin)
    # the square tetromino is the only non-thin shape through rank 4
    assert sum(1 for p in thin if p.rank == 4) == 4


def test_closed_path_filter_matches_fast_enumerator():
    cfg = EnumerationConfig(8, filters=frozenset({"closed-path"}), dedup="dihedral")
    general = {tuple(sorted(p.cell_set)) for p in enumerate_polyominoes(cfg)}
    fast = {tuple(sorted(p.cell_set)) for p in enumerate_closed_paths(8)}
    assert general == fast == {tuple(sorted(((0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2))))}


def test_closed_paths_by_rank(closed_paths_14):
    counts = {}
    for p in closed_paths_14:
        counts[p.rank] = counts.get(p.rank, 0) + 1
        assert closed_path_sequence(p) is not None
    assert counts == {8: 1, 10: 1, 12: 3, 14: 6}


def test_enumeration_is_deterministic():
    cfg = EnumerationConfig(5, filters=frozenset({"thin"}), dedup="dihedral")
    a = [tuple(sorted(p.cell_set)) for p in enumerate_polyominoes(cfg)]
    b = [tuple(sorted(p.cell_set)) for p in enumerate_polyominoes(cfg)]
    assert a == b


def test_canonical_form_symmetry_invariance():
    cells = [(0, 0), (1, 0), (1, 1), (2, 1)]
    for t in (lambda x, y: (-y, x), lambda x, y: (y, x), lambda x, y: (-x, -y)):
        assert canonical_form([t(x, y) for x, y in cells]) == canonical_form(cells)
    assert canonical_form([(x + 5, y - 3) for x, y in cells], "translation") == canonical_form(
        cells, "translation"
    )


def test_min_closed_path_rank_is_eight():
    assert [p.rank for p in enumerate_closed_paths(7)] == []
