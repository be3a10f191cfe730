"""Shared acceptance reporting: each acceptance test registers one
pass/fail line; the summary hook replays them after the run so they are
visible even with output capture on."""

RESULTS: list[str] = []


def register(line: str) -> None:
    RESULTS.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if RESULTS:
        terminalreporter.section("acceptance report")
        for line in RESULTS:
            terminalreporter.write_line(line)
