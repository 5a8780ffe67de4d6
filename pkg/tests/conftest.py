import contextlib

import pytest

_ACCEPTANCE: list[tuple[str, bool, str]] = []


class AcceptanceLog:
    @contextlib.contextmanager
    def criterion(self, name: str):
        note: dict[str, str] = {"detail": ""}
        try:
            yield note
        except BaseException:
            _ACCEPTANCE.append((name, False, note["detail"]))
            raise
        _ACCEPTANCE.append((name, True, note["detail"]))


@pytest.fixture
def acceptance():
    return AcceptanceLog()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
