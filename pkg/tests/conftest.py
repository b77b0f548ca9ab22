"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)")
_outcomes = {}
_titles = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = _CRITERION.match(item.name)
        if m:
            doc = (item.function.__doc__ or "").strip().splitlines()
            _titles[int(m.group(1))] = doc[0] if doc else item.name


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    failed = report.failed or (report.when == "call" and report.skipped)
    if failed:
        _outcomes[n] = "FAIL"
    elif report.when == "call":
        _outcomes.setdefault(n, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _titles:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_titles):
        status = _outcomes.get(n, "NOT RUN")
        terminalreporter.write_line(f"criterion {n:2d}: {status:7s} {_titles[n]}")
