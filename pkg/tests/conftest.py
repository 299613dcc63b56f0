import sys

import pytest

from blockingsets import field_of_order, pg_create


@pytest.fixture(scope="session")
def fano():
    return pg_create(2, field_of_order(2))


def plane(q):
    return pg_create(2, field_of_order(q))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
