def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # Echo the acceptance-criterion verdict lines outside pytest's
    # capture, so they appear in every run log.
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria:")
        for line in RESULTS:
            terminalreporter.write_line(line)
