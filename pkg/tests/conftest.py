import pytest

VERDICTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def verdict():
    """Record one acceptance line, then assert it."""
    def record(label: str, ok: bool, detail: str = "") -> None:
        VERDICTS.append((label, ok, detail))
        print(f"{'PASS' if ok else 'FAIL'} {label}: {detail}")
        assert ok, f"{label}: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in VERDICTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {label}: {detail}")
