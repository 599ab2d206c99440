import math

import pytest

from polyhilbert import validate_polygon
from polyhilbert.verify import DEFAULT_POLYGONS

TRIANGLE = [(1.0, 0.0), (0.0, 1.0), (-1.0, -1.0)]


@pytest.fixture
def square():
    return validate_polygon(DEFAULT_POLYGONS["square"])


@pytest.fixture
def pentagon():
    return validate_polygon(DEFAULT_POLYGONS["pentagon"])


@pytest.fixture
def hexagon():
    return validate_polygon(DEFAULT_POLYGONS["hexagon"])


@pytest.fixture
def triangle():
    return validate_polygon(TRIANGLE)


@pytest.fixture(params=sorted(DEFAULT_POLYGONS))
def polygon(request):
    return validate_polygon(DEFAULT_POLYGONS[request.param])


def regular(n, radius=1.0, phase=0.0):
    return [(radius * math.cos(phase + 2 * math.pi * k / n),
             radius * math.sin(phase + 2 * math.pi * k / n)) for k in range(n)]
