import pytest

_RESULTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, summary): acceptance criterion reported in the summary")
    config.stash[_RESULTS] = []


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        label, summary = marker.args
        item.config.stash[_RESULTS].append((label, summary, report.passed))
    return report


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label, summary, passed in results:
        terminalreporter.line(f"{'PASS' if passed else 'FAIL'} criterion {label}: {summary}")
