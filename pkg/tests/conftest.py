"""Shared fixtures and the acceptance-summary terminal hook."""
from __future__ import annotations

import pytest

from aperylimits import (
    ZETA3_DENOMINATOR_INIT,
    ZETA3_NUMERATOR_INIT,
    iterate,
    zeta3_recurrence,
)

# Populated by tests/test_acceptance.py; printed at the end of the run so
# every criterion has one visible PASS/FAIL line regardless of capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def zeta3_rec():
    return zeta3_recurrence()


@pytest.fixture(scope="session")
def apery_solutions(zeta3_rec):
    """(numerators, denominators) of the classical zeta(3) pair through n=64."""
    num = iterate(zeta3_rec, ZETA3_NUMERATOR_INIT, 65)
    den = iterate(zeta3_rec, ZETA3_DENOMINATOR_INIT, 65)
    return num, den
