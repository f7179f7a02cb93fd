import pytest

_VERDICTS: list[str] = []


@pytest.fixture
def verdict():
    """Record one pass/fail line per acceptance criterion; printed at the end of the run."""
    def emit(number: int, title: str, ok: bool, detail: str = ""):
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  ({detail})"
        print(line)
        _VERDICTS.append(line)
        return ok
    return emit


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance")
        for line in sorted(_VERDICTS):
            terminalreporter.write_line(line)
