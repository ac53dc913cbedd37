"""Shared fixtures plus the acceptance-criteria terminal summary."""
from __future__ import annotations

import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log() -> list[str]:
    """Criterion tests append one 'criterion N ...: PASS/FAIL' line each."""
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter) -> None:
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
