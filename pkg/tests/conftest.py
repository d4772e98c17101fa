"""Collects the acceptance-criterion outcomes and prints one line per criterion."""

import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")
_results: dict[int, bool] = {}
_titles: dict[int, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = _CRITERION.search(item.nodeid)
        if m and item.function.__doc__:
            _titles.setdefault(int(m.group(1)), item.function.__doc__.strip().splitlines()[0])


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or report.failed:
        _results[n] = _results.get(n, True) and not report.failed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        status = "PASS" if _results[n] else "FAIL"
        title = _titles.get(n, "")
        terminalreporter.write_line(f"criterion {n}: {status}" + (f"  ({title})" if title else ""))
