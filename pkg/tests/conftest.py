import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from udcode import Alphabet, Code  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

BIN = Alphabet("01")


def code(*texts, alphabet=BIN):
    return Code.from_strings(alphabet, texts)


@pytest.fixture
def fixtures():
    return FIXTURES


# -- acceptance criteria summary ---------------------------------------------

_criteria: dict = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    passed = call.excinfo is None
    prev = _criteria.get(number)
    _criteria[number] = (title, passed and (prev is None or prev[1]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, passed = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title}")
