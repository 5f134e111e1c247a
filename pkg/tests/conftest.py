import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from latpath.geometry import DirectionOrder, make_polygon, rectangle, standard_triangle  # noqa: E402


@pytest.fixture
def tri2():
    return standard_triangle(2)


@pytest.fixture
def tri3():
    return standard_triangle(3)


@pytest.fixture
def tri4():
    return standard_triangle(4)


@pytest.fixture
def square():
    return rectangle(1, 1)


@pytest.fixture
def x_minus():
    return DirectionOrder((1, 0), (0, -1))


# polygons used by the invariance checks
CORPUS = (
    [standard_triangle(d) for d in (2, 3, 4, 5)]
    + [rectangle(r, s) for r in (1, 2, 3) for s in (1, 2, 3)]
    + [make_polygon([(0, 0), (3, 0), (2, 1), (0, 1)]), make_polygon([(0, 0), (4, 0), (2, 2), (0, 2)])]
)
