"""Shared fixtures for the ShiftLab test suite"""
import logging

import pytest

from core.complexes import complex_from_facets
from core.config import get_settings
from core.models import Graph


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweeps that take more than a few seconds")


@pytest.fixture(autouse=True)
def fresh_settings():
    """Settings are cached per process; start and end every test with a clean cache"""
    get_settings.cache_clear()
    root = logging.getLogger()
    level = root.level
    yield
    get_settings.cache_clear()
    root.setLevel(level)
    for handler in list(root.handlers):
        if getattr(handler, "_shiftlab", False):
            root.removeHandler(handler)


@pytest.fixture
def shifted_example():
    """Non-pure shifted complex with facets 123, 14, 24"""
    return complex_from_facets([(1, 2, 3), (1, 4), (2, 4)], 4)


@pytest.fixture
def path4():
    return Graph(vertex_count=4, edges=[(1, 2), (2, 3), (3, 4)])


@pytest.fixture
def path3():
    return Graph(vertex_count=3, edges=[(1, 2), (2, 3)])


@pytest.fixture
def star4():
    """K_{1,3} with center 1"""
    return Graph(vertex_count=4, edges=[(1, 2), (1, 3), (1, 4)])


@pytest.fixture
def k33():
    return Graph(vertex_count=6, edges=[(u, v) for u in (1, 2, 3) for v in (4, 5, 6)])


@pytest.fixture
def nonpure_shifted():
    """Shifted, non-pure complex whose independence complex is not shiftable"""
    return complex_from_facets([(1, 2, 3), (1, 4), (2, 4), (1, 5)], 5)

