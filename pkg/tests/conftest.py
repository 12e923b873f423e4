def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, status_line
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        terminalreporter.write_line(status_line(k))
