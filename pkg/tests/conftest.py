import pytest

acceptance_lines = []


@pytest.fixture(scope="session")
def full_report():
    """One full registry run shared by the check and acceptance tests."""
    from biforms.checks import run_all
    return run_all(0)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
