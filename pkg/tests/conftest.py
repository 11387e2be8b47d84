"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""
import re

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_c(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2).replace("_", " "))
    if report.when == "call" or report.failed:
        _ACCEPTANCE[key] = _ACCEPTANCE.get(key, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (num, label), ok in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"criterion {num:2d} {label}: {'PASS' if ok else 'FAIL'}")
    passed = sum(_ACCEPTANCE.values())
    terminalreporter.write_line(f"{passed}/{len(_ACCEPTANCE)} criteria pass")
