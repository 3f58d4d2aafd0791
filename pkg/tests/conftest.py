"""Shared fixtures and the acceptance-line reporter.

Acceptance tests register one (criterion, passed, detail) record each;
the terminal-summary hook prints them as single lines so the pass/fail
status of every criterion is visible in plain pytest output.
"""

from __future__ import annotations

import pytest

from wordlab.letter_stats import build_frequency_table, smooth
from wordlab.words import load_bundled_lists

ACCEPTANCE_RECORDS: list[tuple[str, bool, str]] = []


def record_criterion(name: str, passed: bool, detail: str) -> None:
    ACCEPTANCE_RECORDS.append((name, passed, detail))


@pytest.fixture(scope="session")
def lists():
    return load_bundled_lists()


@pytest.fixture(scope="session")
def freq_table(lists):
    return build_frequency_table(lists.answers)


@pytest.fixture(scope="session")
def smoothed_table(freq_table):
    return smooth(freq_table)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RECORDS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_RECORDS:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {name}: {detail}")
