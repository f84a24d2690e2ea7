from __future__ import annotations

import pytest

from supercoho.algebra import build_gl, build_S, build_W

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def gl11():
    return build_gl(1, 1)


@pytest.fixture(scope="session")
def gl22():
    return build_gl(2, 2)


@pytest.fixture(scope="session")
def w2():
    return build_W(2)


@pytest.fixture(scope="session")
def s2():
    return build_S(2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
