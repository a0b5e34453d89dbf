"""Shared pytest plumbing: acceptance criteria report lines.

Criterion tests record one PASS/FAIL line each; the lines are echoed in the
terminal summary so they are visible even with output capture on.
"""

import pytest

_LINES = []


@pytest.fixture
def acceptance_report():
    def _report(tag: str, ok: bool, detail: str) -> None:
        line = f"[{tag}] {'PASS' if ok else 'FAIL'} - {detail}"
        _LINES.append(line)
        print(line, flush=True)
    return _report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.line(line)
