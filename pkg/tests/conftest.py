from __future__ import annotations

import pytest

ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def acceptance_log(request):
    """Record ``(number, passed, detail)`` for the end-of-run summary."""
    log = request.config.stash.setdefault(ACCEPTANCE, {})

    def record(number: int, passed: bool, detail: str):
        log[number] = (passed, detail)
        print(format_line(number, passed, detail))

    return record


def format_line(number, passed, detail):
    return f"[{'PASS' if passed else 'FAIL'}] criterion {number:2d}: {detail}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.stash.get(ACCEPTANCE, None)
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(log):
        terminalreporter.write_line(format_line(number, *log[number]))
