"""Session-wide wall-clock gate: the whole suite must finish quickly."""

import time

SUITE_BUDGET_SECONDS = 120.0
_session_start = None


def pytest_sessionstart(session):
    global _session_start
    _session_start = time.perf_counter()


def session_elapsed() -> float:
    return time.perf_counter() - _session_start


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = session_elapsed()
    terminalreporter.write_line(
        f"suite wall time {elapsed:.2f}s (budget {SUITE_BUDGET_SECONDS:.0f}s)")


def pytest_sessionfinish(session, exitstatus):
    if session_elapsed() >= SUITE_BUDGET_SECONDS:
        session.exitstatus = 1
