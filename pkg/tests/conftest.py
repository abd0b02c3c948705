import progen


def pytest_terminal_summary(terminalreporter):
    if progen.ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in progen.ACCEPTANCE:
            terminalreporter.write_line(line)
