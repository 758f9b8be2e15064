from pathlib import Path

import pytest

import helpers


@pytest.fixture(scope="session")
def toycorpus() -> Path:
    return Path(__file__).resolve().parent.parent / "toycorpus"


def pytest_terminal_summary(terminalreporter):
    if not helpers.ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in helpers.ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
