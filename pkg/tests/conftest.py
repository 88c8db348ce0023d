import os

import pytest

from qfleck.bigpoly import Poly, parse_poly


def P(text: str) -> Poly:
    return parse_poly(text)


@pytest.fixture(scope="session")
def workers() -> int:
    return int(os.environ.get("QFLECK_THREADS") or os.cpu_count() or 1)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("[")[1].split("]")[0])):
            terminalreporter.write_line(line)
