from __future__ import annotations

import pytest

from tropmat.samples import weighted_u24

ACCEPTANCE_LINES: list = []


@pytest.fixture
def wu24():
    return weighted_u24()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
