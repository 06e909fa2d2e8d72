import os

import pytest

from covernum.families import PrimitiveCatalog
from covernum.permengine import load_corpus


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long-running cross-checks, enabled with COVERNUM_SLOW=1"
    )


def pytest_runtest_setup(item):
    if "slow" in item.keywords and not os.environ.get("COVERNUM_SLOW"):
        pytest.skip("set COVERNUM_SLOW=1 to run the long cross-checks")


@pytest.fixture(scope="session")
def catalog():
    return PrimitiveCatalog.default()


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()
