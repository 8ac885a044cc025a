import random
from pathlib import Path

import pytest

from bifront.core import make_point
from bifront.main import parse
from bifront.models import CostGraph, Edge, LPInstance


@pytest.fixture(scope="session")
def test_data_dir():
    """Test data directory Path"""
    return Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def make_rng():
    """Create a function that returns a seeded random.Random instance."""

    def create_rng(seed: int = 0) -> random.Random:
        return random.Random(seed)

    return create_rng


@pytest.fixture(scope="session")
def five_points():
    """Four extreme points (0,4), (1,2), (2,1), (4,0) and the dominated (3,3)."""
    return [
        make_point(0, 4),
        make_point(1, 2),
        make_point(2, 1),
        make_point(4, 0),
        make_point(3, 3),
    ]


@pytest.fixture(scope="session")
def eps_points():
    """Front (1,3), (2,2), (3,1) plus the dominated (2,3)."""
    return [make_point(1, 3), make_point(2, 2), make_point(3, 1), make_point(2, 3)]


@pytest.fixture(scope="session")
def triangle_lp():
    """min (x1, x2) s.t. x1 + x2 >= 2, x >= 0"""
    return LPInstance(A=[[1, 1], [1, 0], [0, 1]], b=[2, 0, 0], C=[[1, 0], [0, 1]])


@pytest.fixture(scope="session")
def staircase_lp(test_data_dir):
    return parse(test_data_dir / "staircase.lp")


@pytest.fixture(scope="session")
def diamond_digraph(test_data_dir):
    return parse(test_data_dir / "diamond.graph")


@pytest.fixture(scope="session")
def cut_triangle():
    """Triangle with cuts {a} = (5,5), {b} = (3,6) and {c} = (6,3)."""
    return CostGraph(
        node_count=3,
        edges=[
            Edge(u=0, v=1, cost=(1, 4)),
            Edge(u=0, v=2, cost=(4, 1)),
            Edge(u=1, v=2, cost=(2, 2)),
        ],
    )


@pytest.fixture(scope="session")
def kp_yes(test_data_dir):
    return parse(test_data_dir / "kp_yes.txt")


@pytest.fixture(scope="session")
def kp_no(test_data_dir):
    return parse(test_data_dir / "kp_no.txt")

