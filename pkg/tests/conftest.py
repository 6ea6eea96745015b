import pytest

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(code, title): exit-gate criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    code, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        detail = ""
        if report.failed:
            detail = str(report.longrepr.reprcrash.message) if hasattr(report.longrepr, "reprcrash") else ""
        _acceptance[code] = (title, report.outcome, detail.splitlines()[0] if detail else "")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for code in sorted(_acceptance, key=lambda c: int(c[1:])):
        title, outcome, detail = _acceptance[code]
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"{code:<4} {status}  {title}"
        if detail and status == "FAIL":
            line += f"  -- {detail}"
        terminalreporter.write_line(line)
