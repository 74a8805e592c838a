from __future__ import annotations

import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from matcat.base import GradedVect, PlainVect  # noqa: E402

settings.register_profile("matcat", max_examples=40, deadline=None)
settings.load_profile("matcat")

#: (criterion, passed, detail) lines collected by the acceptance module
ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


@pytest.fixture(params=[1, 2, 3], ids=lambda q: "q%d" % q)
def graded(request):
    return GradedVect(request.param)


@pytest.fixture
def q2():
    return GradedVect(2)


@pytest.fixture
def plain():
    return PlainVect()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line("%s  %s%s" % ("PASS" if ok else "FAIL", name,
                                                   "  (%s)" % detail if detail else ""))
