"""Suite-wide pytest hooks."""


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One line per acceptance criterion, after the regular summary."""
    try:
        from _criteria import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    tag = {"pass": "PASS", "fail": "FAIL", "not run": "SKIP"}
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        description, outcome = RESULTS[number]
        terminalreporter.write_line(
            f"[{tag[outcome]}] criterion {number:2d}: {description}"
        )
