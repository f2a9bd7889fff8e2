import os

import pytest

from positroids import make_matroid


def pytest_collection_modifyitems(config, items):
    if os.environ.get("RUN_SLOW"):
        return
    skip = pytest.mark.skip(reason="slow; set RUN_SLOW=1 to enable")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def m0():
    """The square-pyramid positroid: rank 2 on [4]."""
    return make_matroid(4, [{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}])


@pytest.fixture
def crossing_sum():
    """Two rank-1 uniform factors on the crossing blocks {1,3} and {2,4}."""
    return make_matroid(4, [{1, 2}, {1, 4}, {2, 3}, {3, 4}])
