import pytest

_criteria: dict[tuple[int, str], bool] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "criterion(num, label): marks a test as one numbered acceptance criterion",
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        _criteria[(marker.args[0], marker.args[1])] = report.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (num, label), passed in sorted(_criteria.items()):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d} {status}  {label}")
