import pytest

# (criterion number, description, passed) recorded by test_acceptance
ACCEPTANCE_LINES: list[tuple[int, str, bool]] = []


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary report."""
    number, text = request.node.get_closest_marker("criterion").args
    record = {"passed": False}
    yield record
    ACCEPTANCE_LINES.append((number, text, record["passed"]))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, passed in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {number:2d}: {text}")
