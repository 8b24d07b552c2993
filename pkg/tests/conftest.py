import pytest

_results: dict[tuple, str] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "_criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        key = marker
        if report.passed:
            _results.setdefault(key, "PASS")
        else:
            _results[key] = "FAIL"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        report._criterion = (m.args[0], m.kwargs.get("reading", "as stated"))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, reading), status in sorted(_results.items()):
        terminalreporter.write_line(f"criterion {number:2d} [{reading}]: {status}")
