from pathlib import Path

import pytest

from tropopt import TropMatrix, TropVector

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def location_data():
    """Two demand points with a unit box around the origin."""
    return {
        "r": TropVector((-3, 1, 1)),
        "s": TropVector((1, 3, -2)),
        "g": TropVector((0, 0, 0)),
        "h": TropVector((1, 1, 1)),
    }


@pytest.fixture
def approx_data():
    """3x3 system with a floor constraint; optimum error 1 at (2, 4, 3)."""
    return {
        "A": TropMatrix(((1, -1, 1), (3, 1, 0), (0, 0, 2))),
        "p": TropVector((3, 4, 4)),
        "g": TropVector((2, 2, 2)),
    }
