import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cleanrings import build_fleet, build_from_text, make_zmod


@pytest.fixture(scope="session")
def fleet():
    return build_fleet()


@pytest.fixture(scope="session")
def small_fleet(fleet):
    """Fleet rings small enough for quadratic oracle scans everywhere."""
    return [r for r in fleet if r.size <= 512]


@pytest.fixture(scope="session")
def f2():
    return make_zmod(2, label="F2")


@pytest.fixture(scope="session")
def z4():
    return make_zmod(4)


@pytest.fixture(scope="session")
def m2f2():
    return build_from_text("M(2,F2)")


@pytest.fixture(scope="session")
def m3f2():
    return build_from_text("M(3,F2)")
