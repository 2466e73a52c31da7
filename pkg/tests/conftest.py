import pytest

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(code, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    code, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[code] = (title, report.outcome == "passed", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for code in sorted(_CRITERIA, key=lambda c: int(c[2:])):
        title, ok, seconds = _CRITERIA[code]
        terminalreporter.write_line(f"{code} {'PASS' if ok else 'FAIL'}  {title}  ({seconds:.2f}s)")
