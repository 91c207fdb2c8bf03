"""Per-criterion PASS/FAIL summary for the acceptance suite."""

import pytest

_results: dict[int, list[bool]] = {}
_titles: dict[int, str] = {}
REPORTED: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    _titles[num] = title
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _results.setdefault(num, []).append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_results):
        ok = all(_results[num])
        tr.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {_titles[num]}")
    for key, value in REPORTED.items():
        tr.write_line(f"reported {key}: {value}")
