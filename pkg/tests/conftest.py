import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from skewpbw.catalog import base_ring_catalog, catalog_instance  # noqa: E402


@pytest.fixture(scope="session")
def rings():
    return base_ring_catalog()


@pytest.fixture(scope="session")
def instances():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = catalog_instance(name)
        return cache[name]

    return get


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
