import pytest

from polyomino_ideals import build, enumerate_closed_paths, load_golden


@pytest.fixture(scope="session")
def r3():
    """3x3 ring: the smallest closed path (rank 8, one unit hole)."""
    return build([(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2)])


@pytest.fixture(scope="session")
def square_tetromino():
    return build([(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture(scope="session")
def domino():
    return build([(0, 0), (1, 0)])


@pytest.fixture(scope="session")
def staircase6():
    return build([(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2)])


@pytest.fixture(scope="session")
def zigzag16():
    return load_golden("zigzag_16")


@pytest.fixture(scope="session")
def closed_paths_12():
    """All closed paths of rank <= 12 up to dihedral symmetry."""
    return list(enumerate_closed_paths(12))


@pytest.fixture(scope="session")
def closed_paths_14():
    return list(enumerate_closed_paths(14))
