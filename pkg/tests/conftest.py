import pytest

import kinvariants.linalg as linalg

# Every SNF computed during the test run is checked against its contract.
linalg.VERIFY = True

_acceptance: dict[int, tuple[str, list[str]]] = {}
_notes: list[str] = []


@pytest.fixture
def acceptance_note(request):
    """Attach a line of measurements to the acceptance summary."""
    m = request.node.get_closest_marker("acceptance")
    prefix = f"{m.args[0]:>2}. " if m else ""
    return lambda text: _notes.append(prefix + text)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            number, title = m.args
            _acceptance.setdefault(number, (title, []))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _acceptance[m.args[0]][1].append(rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, outcomes = _acceptance[number]
        ok = bool(outcomes) and all(o == "passed" for o in outcomes)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {number:>2}. {title}")
    if _notes:
        terminalreporter.section("acceptance measurements")
        for line in _notes:
            terminalreporter.write_line(line)
