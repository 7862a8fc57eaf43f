"""Prints the acceptance-criterion pass/fail lines in the terminal summary,
where pytest's output capture cannot swallow them."""

CRITERION_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_LINES:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for line in CRITERION_LINES:
        terminalreporter.write_line(line)
