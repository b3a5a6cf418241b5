"""Shared test plumbing: collects acceptance-criterion outcomes and prints
one line per criterion after the run, outside pytest's capture."""

_ACCEPTANCE: list[tuple[str, str, str, str]] = []


def record_criterion(num: str, title: str, status: str, detail: str = "") -> None:
    _ACCEPTANCE.append((num, title, status, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, status, detail in sorted(_ACCEPTANCE):
        line = f"[{status:4s}] criterion {num}: {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
