from fractions import Fraction

import pytest

from duality import LpcInstance, SlopeLine
from geometry import Point
from plc import PlcInstance
from tests.strategies import grid
from vc_reduction import Graph


@pytest.fixture
def kernel_example():
    return PlcInstance(((0, 0), (1, 0), (2, 0), (3, 0), (0, 1)), 2)


@pytest.fixture
def grid3():
    return grid(3, 3)


@pytest.fixture
def triangle_points():
    return (Point(0, 0), Point(1, 0), Point(0, 1))


@pytest.fixture
def general_position_six():
    # points on the parabola y = x^2 have no three collinear
    return tuple(Point(x, x * x) for x in range(6))


@pytest.fixture
def k2_graph():
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def triangle_graph():
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def lpc_pair():
    return LpcInstance((SlopeLine(1, 0), SlopeLine(-1, 2)), 1)


@pytest.fixture
def write_file(tmp_path):
    def _write(name: str, text: str):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def half():
    return Fraction(1, 2)
