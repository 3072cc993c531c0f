import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from helpers import group  # noqa: E402


@pytest.fixture(scope="session")
def S3():
    return group(3, (0, 1, 2), (0, 1))


@pytest.fixture(scope="session")
def A4():
    return group(4, (0, 1, 2), ((0, 1), (2, 3)))


@pytest.fixture(scope="session")
def V4():
    return group(4, ((0, 1), (2, 3)), ((0, 2), (1, 3)))


@pytest.fixture(scope="session")
def C3():
    return group(3, (0, 1, 2))


@pytest.fixture(scope="session")
def A6():
    return group(6, (0, 1, 2), (1, 2, 3, 4, 5))
