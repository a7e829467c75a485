import pytest

from boselex import kernels

_CRITERIA = {}
_REPORTED = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture(scope="session")
def warm_kernels():
    kernels.warmup()


@pytest.fixture
def report_value(request):
    """Attach a reported (not asserted) value to the running criterion."""
    def _report(text):
        _REPORTED[request.node.nodeid] = text
    return _report


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _CRITERIA[item.nodeid] = mark.args


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.nodeid in _CRITERIA and (rep.when == "call" or rep.failed):
        number, title = _CRITERIA[item.nodeid]
        item.config._criterion_results = getattr(item.config, "_criterion_results", {})
        previous = item.config._criterion_results.get(number)
        if previous is None or previous[0] == "PASS":
            item.config._criterion_results[number] = ("PASS" if rep.passed else "FAIL", title, item.nodeid)


def pytest_terminal_summary(terminalreporter, config):
    results = getattr(config, "_criterion_results", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        status, title, nodeid = results[number]
        extra = _REPORTED.get(nodeid)
        line = f"AC{number:02d} {status}  {title}"
        if extra:
            line += f"  [{extra}]"
        terminalreporter.write_line(line)
