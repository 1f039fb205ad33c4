import pytest

_ACCEPTANCE: dict = {}


def _line(criterion: int) -> str:
    title, parts = _ACCEPTANCE[criterion]
    ok = all(p[0] for p in parts)
    details = "; ".join(p[1] for p in parts if p[1])
    return f"[AC{criterion:02d}] {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({details})" if details else "")


@pytest.fixture
def record():
    """Store one acceptance result; call before asserting so failures are reported too.

    A criterion split over several tests passes only if every part passes.
    """

    def _record(criterion: int, title: str, ok: bool, detail: str = "") -> bool:
        _ACCEPTANCE.setdefault(criterion, (title, []))[1].append((bool(ok), detail))
        print(_line(criterion))
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_line(k))
    passed = sum(all(p[0] for p in parts) for _, parts in _ACCEPTANCE.values())
    terminalreporter.write_line(f"{passed}/{len(_ACCEPTANCE)} acceptance criteria passed")
