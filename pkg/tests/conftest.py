import pytest

from hullangulation.plane_graph import build_geometric

TRIANGLE = [(0, 0), (6, 0), (3, 5)]
SQUARE = [(0, 0), (4, 0), (4, 4), (0, 4)]
SQUARE_CENTER = SQUARE + [(2, 2)]
SQUARE_OFFCENTER = SQUARE + [(2, 1)]  # general position variant of square + centre
K4_POINTS = [(0, 0), (6, 0), (3, 6), (3, 2)]
K4_EDGES = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)]
CUBE_POINTS = [(0, 0), (6, 0), (6, 6), (0, 6), (2, 2), (4, 2), (4, 4), (2, 4)]
CUBE_EDGES = [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7), (0, 4), (1, 5), (2, 6), (3, 7)]
# triangle 0-1-2 with a pendant vertex 3 hanging off vertex 0, outside the triangle
PENDANT_POINTS = [(0, 0), (4, 0), (2, 3), (-2, -1)]
PENDANT_EDGES = [(0, 1), (1, 2), (0, 2), (0, 3)]
# pentagon 0..4 with chord 0-2: a triangle and a quadrilateral
PENTAGON_POINTS = [(0, 0), (4, 0), (6, 3), (2, 6), (-2, 3)]
PENTAGON_CHORD_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]


@pytest.fixture
def k4():
    return build_geometric(K4_POINTS, K4_EDGES)


@pytest.fixture
def cube():
    return build_geometric(CUBE_POINTS, CUBE_EDGES)


@pytest.fixture
def pendant():
    return build_geometric(PENDANT_POINTS, PENDANT_EDGES)


@pytest.fixture
def square_cycle():
    return build_geometric(SQUARE, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def pentagon_chord():
    return build_geometric(PENTAGON_POINTS, PENTAGON_CHORD_EDGES)
