import _acceptance_report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_report.LINES:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for line in _acceptance_report.LINES:
        terminalreporter.write_line(line)
