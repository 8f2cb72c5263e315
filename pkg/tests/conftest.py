import re

_CRITERION = re.compile(r"::test_criterion_(\d+)_")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one ACCEPTANCE line per shipping criterion, after capture ends."""
    verdicts = {}
    for outcome, passed in (("passed", True), ("failed", False)):
        for rep in terminalreporter.stats.get(outcome, ()):
            if getattr(rep, "when", None) != "call":
                continue
            m = _CRITERION.search(rep.nodeid)
            if m:
                verdicts[int(m.group(1))] = passed
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(verdicts):
        terminalreporter.write_line(
            f"ACCEPTANCE {n}: {'PASS' if verdicts[n] else 'FAIL'}"
        )
