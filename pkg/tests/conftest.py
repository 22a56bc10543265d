import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cornerchains.pllc import possible_last_lower_corners


@pytest.fixture(scope="session")
def table35():
    return possible_last_lower_corners(35)


@pytest.fixture(scope="session")
def table10():
    return possible_last_lower_corners(10)
