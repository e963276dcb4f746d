_criteria = {}


def pytest_runtest_logreport(report):
    if "test_criterion_" in report.nodeid and report.when == "call":
        _criteria[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_criterion_" in report.nodeid and report.failed:
        _criteria[report.nodeid.split("::")[-1]] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        verdict = "PASS" if _criteria[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict} {name}")
