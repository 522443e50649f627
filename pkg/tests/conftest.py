from __future__ import annotations

import pytest

_LINES: list[str] = []


@pytest.fixture
def acceptance_lines() -> list[str]:
    return _LINES


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
