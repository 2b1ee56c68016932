import json
import os

import pytest

from gkz import build_fan, group_rays, parse_and_validate

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")
GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")

K3_WEIGHTS = [
    [1, 1, 1, 0, 0, 0, -2, -1],
    [0, 0, 0, 1, 1, 1, 0, -3],
]
K3_LABELS = ["x0", "x1", "x2", "y0", "y1", "y2", "p", "q"]

# wall indices in counterclockwise order from the positive x-axis
WALL_0, WALL_3, WALL_2, WALL_1 = 0, 1, 2, 3
# chambers: I is the third quadrant
CHAMBER_III, CHAMBER_II, CHAMBER_I, CHAMBER_IV = 0, 1, 2, 3


def load_golden(name):
    with open(os.path.join(GOLDEN_DIR, name), "r", encoding="utf-8") as f:
        return json.load(f)


@pytest.fixture
def k3_w():
    return parse_and_validate(K3_WEIGHTS, K3_LABELS)


@pytest.fixture
def k3_fan(k3_w):
    return build_fan(group_rays(k3_w))


@pytest.fixture
def square_w():
    return parse_and_validate([[1, -1, 1, -1], [1, -1, -1, 1]], ["a", "b", "c", "d"])


@pytest.fixture
def square_fan(square_w):
    return build_fan(group_rays(square_w))
