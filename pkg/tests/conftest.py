import pytest

ACCEPTANCE = {}


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(key, ok, detail)``."""
    def record(key, ok, detail=""):
        ACCEPTANCE[key] = (ok, detail)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        status = ok if isinstance(ok, str) else ("PASS" if ok else "FAIL")
        terminalreporter.write_line(f"[{status}] {key}: {detail}")
