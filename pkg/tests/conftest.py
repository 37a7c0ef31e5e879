import pytest

_ACCEPTANCE = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, elapsed, budget in _ACCEPTANCE:
        mark = "PASS" if ok else "FAIL"
        limit = f" (limit {budget:g} s)" if budget else ""
        terminalreporter.write_line(f"[{mark}] {name}: {elapsed:.3f} s{limit}")
