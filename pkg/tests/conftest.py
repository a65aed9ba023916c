import random
import sys
from functools import lru_cache

import pytest

from contactlie import families as F


@lru_cache(maxsize=None)
def build(family, *params):
    """Cached ``(algebra, decompositions)`` for a family instance."""
    return F.construct(F.FamilySpec(family, [str(p) for p in params]))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])
