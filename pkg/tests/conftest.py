"""Collects the per-criterion checklist lines into the terminal summary."""

import re

import pytest

_CRITERION = re.compile(r"^criterion \d+:")
_NAME = re.compile(r"test_criterion_0*(\d+)")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call":
        return
    lines = getattr(item.config, "_criterion_lines", None)
    if lines is None:
        lines = item.config._criterion_lines = []
    for line in rep.capstdout.splitlines():
        if _CRITERION.match(line):
            lines.append(line)
    if rep.failed:
        m = _NAME.search(item.name)
        if m:
            lines.append("criterion %s: FAIL - see the FAILED section above"
                         % m.group(1))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_criterion_lines", [])
    if lines:
        terminalreporter.section("acceptance checklist")
        for line in lines:
            terminalreporter.write_line(line)
