from __future__ import annotations

import sys

import pytest
from hypothesis import settings

from rigisoc import groups as gr
from rigisoc.levels import make_level

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def quad():
    return make_level("quad", gr.cyclic(2), 2)


@pytest.fixture
def quad6():
    return make_level("quad6", gr.cyclic(2), 6)


@pytest.fixture
def cubic():
    return make_level("cubic", gr.cyclic(3), 3)


@pytest.fixture
def base():
    return make_level("base", gr.trivial(), 1)


def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number][1])
