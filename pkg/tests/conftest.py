"""Shared fixtures, plus a summary hook that prints one line per
acceptance criterion at the end of the run."""

from __future__ import annotations

import pytest

_ACCEPTANCE_LINES: list[tuple[int, str]] = []


def _record_criterion(num: int, description: str, ok: bool, extra: str = "") -> bool:
    status = "PASS" if ok else "FAIL"
    line = f"{status}  criterion {num:2d}: {description}"
    if extra:
        line += f"  [{extra}]"
    _ACCEPTANCE_LINES.append((num, line))
    return ok


@pytest.fixture
def criterion():
    """Record a pass/fail line for an acceptance criterion.

    Usage: ``assert criterion(3, "maximal rank", ok, extra="12.3 s")``.
    """
    return _record_criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
