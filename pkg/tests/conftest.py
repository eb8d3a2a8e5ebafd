import pytest

_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; call as ``criterion(n, ok, detail)`` then assert ``ok``."""

    def record(label, ok, detail=""):
        line = f"criterion {label}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
        print(line)
        _LINES.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
