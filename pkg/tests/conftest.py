import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from polyminor.geometry import Polyomino

from oracles import big_frame_shape, frame_shape


@pytest.fixture(scope="session")
def frame() -> Polyomino:
    return frame_shape()


@pytest.fixture(scope="session")
def big_frame() -> Polyomino:
    return big_frame_shape()


@pytest.fixture(scope="session")
def unit_cell() -> Polyomino:
    return Polyomino([(0, 0)])


@pytest.fixture(scope="session")
def domino_h() -> Polyomino:
    return Polyomino([(0, 0), (1, 0)])


@pytest.fixture(scope="session")
def skew_tromino() -> Polyomino:
    return Polyomino([(0, 0), (1, 0), (1, 1)])


@pytest.fixture(scope="session")
def s_tetromino() -> Polyomino:
    return Polyomino([(0, 0), (1, 0), (1, 1), (2, 1)])


@pytest.fixture(scope="session")
def u_pentomino() -> Polyomino:
    return Polyomino([(0, 0), (0, 1), (0, 2), (1, 0), (1, 2)])


@pytest.fixture(scope="session")
def block_2x2() -> Polyomino:
    return Polyomino([(0, 0), (0, 1), (1, 0), (1, 1)])


@pytest.fixture(scope="session")
def rect_2x3() -> Polyomino:
    return Polyomino([(i, j) for i in range(2) for j in range(3)])
