"""Prints the collected acceptance verdict lines after the run.

Output capture would otherwise swallow the per-check PASS/FAIL lines;
the terminal summary hook runs after capture is torn down, so the
verdict table always lands in the log.
"""


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    from helpers import VERDICTS
    if VERDICTS:
        terminalreporter.section("acceptance verdicts")
        for line in VERDICTS:
            terminalreporter.write_line(line)
