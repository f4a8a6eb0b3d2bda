"""Make the sibling helper modules importable and surface the gate report."""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import acceptance_report


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    if acceptance_report.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_report.lines():
            terminalreporter.write_line(line)
