import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

GOLDEN = Path(__file__).parent / "golden"


def word_strategy(n: int = 4, max_size: int = 7):
    return st.lists(st.integers(1, n), max_size=max_size).map(tuple)


def composition_strategy(max_weight: int = 6):
    return st.lists(st.integers(1, max_weight), min_size=1, max_size=max_weight).filter(
        lambda xs: sum(xs) <= max_weight
    ).map(tuple)


@pytest.fixture
def golden():
    return GOLDEN


_criteria: dict[str, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _criteria[name] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        outcome, duration = _criteria[name]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  ({duration:.2f}s)")
