"""Shared pytest hooks: print one pass/fail line per acceptance criterion."""

_acceptance_results = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance_results[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for nodeid in sorted(_acceptance_results):
        name = nodeid.split("::")[-1]
        verdict = "PASS" if _acceptance_results[nodeid] == "passed" else "FAIL"
        terminalreporter.write_line(f"{name}: {verdict}")
