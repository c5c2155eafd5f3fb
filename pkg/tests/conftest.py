import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from secure_swipt import SystemParams  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture
def defaults():
    """Numerical-results defaults at SNR = 10 dB."""
    return SystemParams()


@pytest.fixture
def report():
    def _report(criterion, ok, detail):
        line = f"[criterion {criterion}] {'PASS' if ok else 'FAIL'}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
