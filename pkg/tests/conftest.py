import sys

import pytest

from mackext.group import make_context


@pytest.fixture
def ctx32():
    return make_context(3, 2)


@pytest.fixture
def ctx52():
    return make_context(5, 2)


def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
