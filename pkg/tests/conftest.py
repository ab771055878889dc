import props


def pytest_terminal_summary(terminalreporter):
    rows = sorted(props.ACCEPTANCE_RESULTS)
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, text in rows:
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {text}")
