"""Replays the acceptance-gate verdict lines after the test run.

Capture swallows per-test output for passing tests, so the acceptance
tests record their one-line verdicts in a module list and this hook
writes them into the terminal summary where they are always visible.
"""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    for name, module in list(sys.modules.items()):
        if name.rpartition(".")[2] == "test_acceptance":
            lines = getattr(module, "VERDICTS", None)
            if lines:
                terminalreporter.section("acceptance criteria")
                for line in sorted(lines):
                    terminalreporter.write_line(line)
            return
